"""The hyperbolic-volume-converging sequence for the figure-eight knot.

Ratios of invariant values at t = 1 give v_n = 4 pi log|A_n(1)| / n^2,
which approaches the hyperbolic volume 2.02988... from below.  All
arithmetic is exact until the single final log.
"""

import time

import mpmath

from twistvol import bundled_job_path, fit_limit, load_job, volume_table

job = load_job(bundled_job_path('figure-eight'))

start = time.time()
report = volume_table(job.presentation, job.representation,
                      n_max=15, precision=256, reference=job.reference)
elapsed = time.time() - start

print(report.format_table())
print('computed in %.1f s with 256-bit embedding precision' % elapsed)
print()

even = [row for row in report.rows if row.n % 2 == 0]
odd = [row for row in report.rows if row.n % 2 == 1]
print('even subsequence increasing:',
      all(a.estimate < b.estimate for a, b in zip(even, even[1:])))
print('odd subsequence increasing:',
      all(a.estimate < b.estimate for a, b in zip(odd, odd[1:])))
print('gaps strictly decreasing:',
      all(a.gap > b.gap for a, b in zip(report.rows, report.rows[1:])))
print()
print('EXPERIMENTAL extrapolated limit (v_n = V - c/n^2 fit):',
      mpmath.nstr(fit_limit(report), 6), ' (reference: %s)' % job.reference)
