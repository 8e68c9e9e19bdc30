"""
Working with truncated series
=============================

A quick tour of the series kernel: arithmetic, composition, reversion,
and the special expansions used to build extremal functions.
"""

import numpy as np

from petalstar import Series, asinh_series, compose, exp_series, integrate_over_t
from petalstar import log_over_z, revert, SchlichtSeries

# Series are just truncation order + coefficients; arithmetic truncates to
# the smaller operand order.
geo = Series.one(6) / Series([1, -1, 0, 0, 0, 0, 0])
print("1/(1-z)      :", np.round(geo.coeffs.real, 6))

# Composition and reversion are exact at the truncation order.
f = SchlichtSeries([0, 1, 1, 0, 0, 0])          # z + z^2
finv = revert(f)
print("invert z+z^2 :", np.round(finv.coeffs.real, 6))
print("f o finv     :", np.round(compose(f, finv).coeffs.real, 12))

# log(f/z) and exp are mutual inverses on normalized series.
koebe5 = SchlichtSeries(np.arange(6, dtype=complex))  # z + 2z^2 + ... (Koebe)
lo = log_over_z(koebe5)
print("log(f/z)     :", np.round(lo.coeffs.real, 6), " (this is -2 log(1-z))")
print("exp back     :", np.round(exp_series(lo).coeffs.real, 6))

# arcsinh(c z^k) and its normalized integral, the building blocks of every
# extremal function in the package.
a = asinh_series(1.0, 1, 7)
print("arcsinh(z)   :", np.round(a.coeffs.real, 6))
print("int a(t)/t dt:", np.round(integrate_over_t(a).coeffs.real, 6))
