"""
The piecewise disk maximizer and its oracle
===========================================

For real (A, B, C) the maximum of |A + B z + C z^2| + 1 - |z|^2 over the
closed unit disk has a closed piecewise form.  This script compares it with
a dense polar-grid maximization on a spread of triples covering the
branches.
"""

import numpy as np

from petalstar import quad_disk_max, quad_disk_max_grid

triples = [
    (0.0, 0.0, 0.0),     # maximized at the center
    (1.0, 2.0, 0.0),     # dominant linear term, boundary maximum
    (0.25, 0.0, 0.25),   # aligned quadratic, center-dominated
    (-1.0, 1.0, 1.0),    # opposite-sign product, square-root branch
    (0.5, -1.5, -0.5),
    (-2.0, 0.3, 1.8),
    (1.2, 0.01, -1.1),
]

print(f"{'A':>6} {'B':>6} {'C':>6} | {'piecewise':>12} {'grid 600x600':>12} {'diff':>10}")
print("-" * 60)
for a, b, c in triples:
    exact = quad_disk_max(a, b, c)
    grid = quad_disk_max_grid(a, b, c)
    print(f"{a:6.2f} {b:6.2f} {c:6.2f} | {exact:12.8f} {grid:12.8f} {exact - grid:10.1e}")

rng = np.random.default_rng(0)
worst = 0.0
for _ in range(300):
    a, b, c = rng.uniform(-2, 2, 3)
    worst = max(worst, abs(quad_disk_max(a, b, c) - quad_disk_max_grid(a, b, c)))
print("-" * 60)
print(f"worst disagreement over 300 random triples: {worst:.2e}")
