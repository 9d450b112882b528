"""Words, presentations, and Fox free differential calculus.

The twisted invariant machinery starts from a deficiency-one group
presentation.  This demo parses the figure-eight knot group, forms the
relator, and differentiates it with respect to each generator.
"""

from twistvol import GroupRingElement, Word, fox_derivative, parse_presentation

presentation = parse_presentation("""
gens: a b
rel: aBAba = baBAb
""")
names = presentation.generator_names
print('presentation:')
print(presentation.to_text())

r = presentation.relators()[0]
print('relator r = lhs * rhs^-1 =', r.to_string(names), '(length %d)' % len(r))
print('abelianization alpha(r) =', presentation.abelianize(r), '(balanced)')
print()

for j, name in enumerate(names):
    d = fox_derivative(r, j)
    print('dr/d%s = %s' % (name, d.to_string(names)))
print()

# The fundamental identity of Fox calculus: sum_j dr/dx_j (x_j - 1) = r - 1.
total = GroupRingElement()
for j in range(presentation.num_generators):
    xj = GroupRingElement(Word([j + 1]))
    total = total + fox_derivative(r, j) * (xj - 1)
print('fundamental identity holds:', total == GroupRingElement(r) - 1)
