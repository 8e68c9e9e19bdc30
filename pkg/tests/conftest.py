"""Shared helpers for the test suite."""

import numpy as np

from petalstar import CaratheodoryPoint, SchlichtSeries, Series

SEED = 20240811


def random_schlicht(rng, order=10, scale=0.3) -> SchlichtSeries:
    """A normalized series with random complex tail coefficients."""
    tail = scale * (rng.standard_normal(order - 1) + 1j * rng.standard_normal(order - 1))
    coeffs = np.zeros(order + 1, dtype=complex)
    coeffs[1] = 1.0
    coeffs[2:] = tail
    return SchlichtSeries(coeffs)


def random_point(rng) -> CaratheodoryPoint:
    """Uniform parameter point: zeta1 in [0,1], zeta2/zeta3 in the disk."""
    def disk():
        return np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())

    return CaratheodoryPoint(float(rng.uniform()), disk(), disk())


def residual(a: Series, b: Series) -> float:
    """Largest coefficient difference up to the common order."""
    n = min(a.order, b.order)
    return float(np.abs(a.coeffs[: n + 1] - b.coeffs[: n + 1]).max())
