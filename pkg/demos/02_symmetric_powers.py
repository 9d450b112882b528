"""Symmetric powers of the figure-eight holonomy matrices.

The SL(2) images act on homogeneous polynomials of degree n-1 through
the inverse matrix; expanding binomially gives exact SL(n) matrices.
The n = 3, 4 outputs are the classical displays for this representation.
"""

from twistvol import Matrix, NumberField, symmetric_power

field = NumberField([1, 1, 1], ('-0.5', '0.8660254038'))   # Q[u]/(u^2+u+1)
u = field.generator

rho_a = Matrix(field, [[1, 1], [0, 1]])
rho_b = Matrix(field, [[field.one, field.zero], [-u, field.one]])


def show(label, m):
    print(label)
    width = max(len(str(e)) for row in m.rows for e in row)
    for row in m.rows:
        print('   ', '  '.join(str(e).rjust(width) for e in row))
    print()


print('coefficient vectors are [c0, c1] meaning c0 + c1*u,',
      'with u^2 + u + 1 = 0\n')
show('rho(a):', rho_a)
show('rho(b):', rho_b)

for n in (2, 3, 4):
    show('sigma_%d(rho(a)):' % n, symmetric_power(rho_a, n))
    show('sigma_%d(rho(b)):' % n, symmetric_power(rho_b, n))

# Functoriality: sigma_n is multiplicative and lands in SL(n).
prod = symmetric_power(rho_a * rho_b, 5)
split = symmetric_power(rho_a, 5) * symmetric_power(rho_b, 5)
print('sigma_5(ab) == sigma_5(a) sigma_5(b):', prod == split)
print('det sigma_5(a) =', symmetric_power(rho_a, 5).det())
