"""Truncated Taylor series with complex coefficients.

Everything in this package is built on the :class:`Series` carrier: a
truncation order ``N`` and the ``N + 1`` coefficients ``c0 .. cN`` of an
expansion about 0.  Values are immutable after construction and all
operations are pure functions, so series can be shared freely between
workers.

Binary operations truncate to the smaller operand order.  Composition and
reversion are exact at the truncation order: the first ``N`` coefficients of
the result equal those of the exact (untruncated) operation.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import (
    NonzeroConstant,
    NonzeroInnerConstant,
    NotInvertibleAtOrigin,
    NotNormalized,
    ZeroConstantTerm,
)

#: Truncation order used when callers do not request one explicitly.  All
#: closed-form functionals in this package need coefficients through degree
#: 4 only; the default leaves room for the degree-7 extremal expansions.
DEFAULT_ORDER = 10

#: |c0| below this threshold counts as a structural zero in division.
DIV_EPSILON = 1e-14

#: Tolerance used when checking the c0 = 0, c1 = 1 normalization.
_NORM_TOL = 1e-12


class Series:
    """A truncated power series ``c0 + c1 z + ... + cN z^N``.

    Parameters
    ----------
    coeffs : sequence of complex
        Coefficients ``c0 .. cN``; the truncation order is ``len(coeffs) - 1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[complex]):
        arr = np.asarray(coeffs, dtype=complex)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coeffs must be a non-empty 1-d sequence")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "Series":
        return cls(np.zeros(order + 1, dtype=complex))

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "Series":
        c = np.zeros(order + 1, dtype=complex)
        c[0] = 1.0
        return cls(c)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "Series":
        """The series of ``z`` itself."""
        c = np.zeros(order + 1, dtype=complex)
        if order >= 1:
            c[1] = 1.0
        return cls(c)

    def __repr__(self) -> str:
        return f"Series(order={self.order}, coeffs={np.round(self.coeffs, 12)!r})"

    def __call__(self, z: complex) -> complex:
        """Evaluate the truncated polynomial at ``z`` (Horner)."""
        acc = 0j
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return acc

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, float, complex)):
            c = np.zeros(self.order + 1, dtype=complex)
            c[0] = other
            return Series(c)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        n = min(self.order, rhs.order)
        return Series(self.coeffs[: n + 1] + rhs.coeffs[: n + 1])

    __radd__ = __add__

    def __neg__(self):
        return Series(-self.coeffs)

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.__add__(-rhs)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return Series(self.coeffs * other)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        prod = np.convolve(self.coeffs[: n + 1], other.coeffs[: n + 1])
        return Series(prod[: n + 1])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex)):
            return Series(self.coeffs / other)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        b = other.coeffs
        if abs(b[0]) <= DIV_EPSILON:
            raise ZeroConstantTerm(
                f"divisor constant term {b[0]!r} is below {DIV_EPSILON}"
            )
        a = self.coeffs
        q = np.zeros(n + 1, dtype=complex)
        for k in range(n + 1):
            q[k] = (a[k] - np.dot(q[:k], b[k:0:-1])) / b[0]
        return Series(q)

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        """JSON-ready form ``{"order": N, "re": [...], "im": [...]}``."""
        return {
            "order": self.order,
            "re": [float(x) for x in self.coeffs.real],
            "im": [float(x) for x in self.coeffs.imag],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Series":
        re = np.asarray(data["re"], dtype=float)
        im = np.asarray(data["im"], dtype=float)
        if re.shape != im.shape or re.size != int(data["order"]) + 1:
            raise ValueError("inconsistent serialized series")
        return cls(re + 1j * im)


class SchlichtSeries(Series):
    """A series with the normalization ``c0 = 0``, ``c1 = 1``.

    This is the coefficient carrier for normalized univalent functions
    ``f(z) = z + a2 z^2 + a3 z^3 + ...``.
    """

    __slots__ = ()

    def __init__(self, coeffs: Sequence[complex]):
        super().__init__(coeffs)
        if self.order < 1 or self.coeffs[0] != 0 or self.coeffs[1] != 1:
            raise NotNormalized(
                "SchlichtSeries requires c0 = 0 and c1 = 1 exactly"
            )

    @classmethod
    def from_tail(cls, tail: Sequence[complex], order: int = DEFAULT_ORDER) -> "SchlichtSeries":
        """Build ``z + a2 z^2 + ...`` from the tail ``(a2, a3, ...)``."""
        tail = np.asarray(tail, dtype=complex)
        if order < tail.size + 1:
            order = tail.size + 1
        c = np.zeros(order + 1, dtype=complex)
        c[1] = 1.0
        c[2 : 2 + tail.size] = tail
        return cls(c)


# -- calculus helpers ---------------------------------------------------------


def differentiate(f: Series) -> Series:
    """Term-wise derivative; the order drops by one."""
    if f.order == 0:
        return Series([0.0])
    n = np.arange(1, f.order + 1)
    return Series(f.coeffs[1:] * n)


def compose(outer: Series, inner: Series) -> Series:
    """Taylor coefficients of ``outer(inner(z))`` to the minimum order.

    ``inner`` must have zero constant term, otherwise the truncated
    coefficients of the composite would not be well defined.
    """
    if inner.coeffs[0] != 0:
        raise NonzeroInnerConstant("inner series must have zero constant term")
    n = min(outer.order, inner.order)
    inner_t = Series(inner.coeffs[: n + 1])
    acc = Series.zero(n)
    for c in outer.coeffs[n::-1]:
        acc = acc * inner_t + c
    return acc


def revert(f: Series) -> Series:
    """Compositional inverse ``F`` with ``compose(f, F) = z`` up to order.

    Solved coefficient by coefficient from the identity ``f(F(w)) = w``:
    at each degree ``n`` the unknown ``F_n`` enters linearly with factor
    ``c1``, so the residual of the partial composition determines it.
    """
    if f.coeffs[0] != 0 or abs(f.coeffs[1]) == 0:
        raise NotInvertibleAtOrigin("reversion needs c0 = 0 and c1 != 0")
    n = f.order
    inv = np.zeros(n + 1, dtype=complex)
    if n >= 1:
        inv[1] = 1.0 / f.coeffs[1]
    for k in range(2, n + 1):
        partial = compose(Series(f.coeffs[: k + 1]), Series(inv[: k + 1]))
        inv[k] = -partial.coeffs[k] / f.coeffs[1]
    return Series(inv)


def log_over_z(f: Series) -> Series:
    """The series ``log(f(z) / z)`` for a normalized ``f``; order drops by 1.

    The constant term of the result is 0 (principal branch, ``log 1 = 0``).
    """
    if f.order < 1 or abs(f.coeffs[0]) > _NORM_TOL or abs(f.coeffs[1] - 1) > _NORM_TOL:
        raise NotNormalized("log_over_z needs c0 = 0 and c1 = 1")
    g = Series(f.coeffs[1:])  # f / z, constant term 1
    d = differentiate(g) / g  # (log g)' to order g.order - 1
    out = np.zeros(g.order + 1, dtype=complex)
    for k in range(1, g.order + 1):
        out[k] = d.coeffs[k - 1] / k
    return Series(out)


def exp_series(f: Series) -> Series:
    """Taylor series of ``exp(f)`` for ``f`` with zero constant term."""
    if f.coeffs[0] != 0:
        raise NonzeroConstant("exp_series needs a zero constant term")
    n = f.order
    out = np.zeros(n + 1, dtype=complex)
    out[0] = 1.0
    # E' = E f'  =>  k E_k = sum_{j=1..k} j f_j E_{k-j}
    for k in range(1, n + 1):
        j = np.arange(1, k + 1)
        out[k] = np.dot(j * f.coeffs[1 : k + 1], out[k - 1 :: -1][: k]) / k
    return Series(out)


def integrate_over_t(f: Series) -> Series:
    """``int_0^z f(t)/t dt``, i.e. the term-wise map ``c_n z^n -> (c_n/n) z^n``.

    Requires a zero constant term, otherwise the integrand is singular at 0.
    """
    if f.coeffs[0] != 0:
        raise NonzeroConstant("integrand f(t)/t would be singular at t = 0")
    out = np.zeros(f.order + 1, dtype=complex)
    for k in range(1, f.order + 1):
        out[k] = f.coeffs[k] / k
    return Series(out)


def asinh_series(c: complex, k: int, order: int) -> Series:
    """Taylor series of ``arcsinh(c z^k)`` truncated at ``order``.

    Uses the alternating expansion with coefficients
    ``(2n)! / (4^n (n!)^2 (2n+1))`` on odd powers of ``c z^k``.
    """
    if k < 1:
        raise ValueError("power k must be a positive integer")
    if order < 0:
        raise ValueError("order must be non-negative")
    out = np.zeros(order + 1, dtype=complex)
    coeff = 1.0
    n = 0
    while (2 * n + 1) * k <= order:
        out[(2 * n + 1) * k] = coeff * c ** (2 * n + 1)
        coeff *= -((2 * n + 1) ** 2) / (2.0 * (n + 1) * (2 * n + 3))
        n += 1
    return Series(out)


def rotate(f: Series, theta: float) -> Series:
    """The rotated series of ``e^{-i theta} f(e^{i theta} z)``.

    Coefficients map as ``c_n -> c_n e^{i (n-1) theta}``; a normalized
    series stays normalized.
    """
    n = np.arange(f.order + 1)
    coeffs = f.coeffs * np.exp(1j * (n - 1) * theta)
    if isinstance(f, SchlichtSeries):
        coeffs = coeffs.copy()
        coeffs[0] = 0.0
        coeffs[1] = 1.0
        return SchlichtSeries(coeffs)
    return Series(coeffs)
