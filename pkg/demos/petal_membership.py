"""
Sampling class membership
=========================

A function belongs to the petal starlike class when z f'(z)/f(z) keeps its
values inside {w : |sinh(w - 1)| < 1}.  The sampling check evaluates that
margin on circles; it is numerical evidence, not proof, so the report
carries a truncation-tail caveat.
"""

import numpy as np

from petalstar import SchlichtSeries, class_check, in_petal, petal_map, preset

# the petal map sends the disk inside the petal by construction
for z in (0.0, 0.5, 0.9j, -0.99):
    w = petal_map(z)
    print(f"petal_map({z!s:>6}) = {w:.4f}   inside: {in_petal(w)}")

print()
f0 = preset("f0", 30)
rep = class_check(f0, np.linspace(0.15, 0.9, 6), angles=64)
print("f0 (the class's principal extremal):")
print(f"  min margin {rep.min_margin:+.4f} over {rep.samples} samples "
      f"(tail estimate {rep.tail_estimate:.1e})")

koebe = SchlichtSeries(np.arange(31, dtype=complex))
rep = class_check(koebe, [0.9], angles=64)
print("Koebe function z/(1-z)^2 (starlike, but not for the petal):")
print(f"  min margin {rep.min_margin:+.3g} at z = {rep.worst_point:.3f}")
