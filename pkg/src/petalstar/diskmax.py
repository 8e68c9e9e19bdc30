"""Maximum of ``|A + B z + C z^2| + 1 - |z|^2`` over the closed unit disk.

For real ``(A, B, C)`` the maximum has a closed piecewise form; the branch
depends on the sign of ``A C`` and on how ``B^2`` compares with a handful of
expressions in ``|A|, |B|, |C|``.  :func:`quad_disk_max` implements that
formula; :func:`quad_disk_max_grid` is an independent polar-grid oracle used
to certify every branch numerically.

Ties on branch boundaries resolve to the first branch listed; adjacent
branches agree there (continuity), which the oracle agreement test confirms.
The fall-through branches are reached by explicit negation of the earlier
conditions, so the function is total on finite inputs.  The square root in
the last branch is only evaluated when ``A C < 0``, where its argument is
``>= 1``.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import DomainViolation

__all__ = ["quad_disk_max", "quad_disk_max_grid"]


def quad_disk_max(a: float, b: float, c: float) -> float:
    """Closed-form maximum of ``|a + b z + c z^2| + 1 - |z|^2``, ``|z| <= 1``."""
    aa, ab, ac = abs(a), abs(b), abs(c)
    if a * c >= 0.0:
        if ab >= 2.0 * (1.0 - ac):
            return aa + ab + ac
        # here |b| < 2 (1 - |c|) forces |c| < 1
        return 1.0 + aa + b * b / (4.0 * (1.0 - ac))

    # a c < 0: c != 0, so 1/c^2 is finite
    gate = -4.0 * a * c * (c ** -2 - 1.0)
    if gate <= b * b and ab < 2.0 * (1.0 - ac):
        return 1.0 - aa + b * b / (4.0 * (1.0 - ac))
    if b * b < min(4.0 * (1.0 + ac) ** 2, gate):
        return 1.0 + aa + b * b / (4.0 * (1.0 + ac))

    # residual region
    if ac * (ab + 4.0 * aa) <= abs(a * b):
        return aa + ab - ac
    if abs(a * b) <= ac * (ab - 4.0 * aa):
        return -aa + ab + ac
    return (ac + aa) * float(np.sqrt(1.0 - b * b / (4.0 * a * c)))


@lru_cache(maxsize=8)
def _polar_grid(radial: int, angular: int):
    r = np.linspace(0.0, 1.0, radial)[:, None]
    t = np.linspace(0.0, 2.0 * np.pi, angular, endpoint=False)[None, :]
    z = (r * np.exp(1j * t)).ravel()
    weight = np.broadcast_to(1.0 - r * r, (radial, angular)).ravel()
    return z, z * z, weight


def quad_disk_max_grid(a: float, b: float, c: float,
                       radial: int = 600, angular: int = 600) -> float:
    """Grid oracle: maximum of the objective over an ``radial x angular``
    polar grid of the closed disk (radii include 0 and 1)."""
    if radial < 2 or angular < 4:
        raise DomainViolation("grid needs radial >= 2 and angular >= 4")
    z, z2, weight = _polar_grid(radial, angular)
    vals = np.abs(a + b * z + c * z2) + weight
    return float(vals.max())
