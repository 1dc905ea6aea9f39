"""Truncated Taylor-jet arithmetic of fixed order 4.

A ``Jet`` stores the coefficients (c0, ..., c4) of a scalar function's
Taylor expansion at a point, c_k = f^(k)(t) / k!.  All operations are exact
truncated-series arithmetic, so derivatives extracted from jets carry no
discretization error, only roundoff.

Order 4 is the smallest order that feeds the full Frenet apparatus in a
4-space (four derivatives of the position).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivisionNearZero, SqrtNonPositive

ORDER = 4
_N = ORDER + 1
_FACT = (1.0, 1.0, 2.0, 6.0, 24.0)

DIV_FLOOR = 1e-300


@dataclass(frozen=True)
class Jet:
    """Order-4 truncated Taylor series; immutable."""

    coeffs: tuple[float, float, float, float, float]

    def __post_init__(self):
        if len(self.coeffs) != _N:
            raise ValueError(f"Jet needs exactly {_N} coefficients")

    @property
    def value(self) -> float:
        return self.coeffs[0]

    def derivative(self, k: int) -> float:
        """k-th derivative value, k in 0..4."""
        return self.coeffs[k] * _FACT[k]

    def d(self) -> "Jet":
        """Jet of the derivative function.

        The top coefficient is zeroed: one order of validity is lost per
        differentiation.
        """
        c = self.coeffs
        return Jet((c[1], 2.0 * c[2], 3.0 * c[3], 4.0 * c[4], 0.0))

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Jet):
            a, b = self.coeffs, other.coeffs
            return Jet(tuple(a[i] + b[i] for i in range(_N)))
        c = self.coeffs
        return Jet((c[0] + other, c[1], c[2], c[3], c[4]))

    __radd__ = __add__

    def __neg__(self):
        return Jet(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, Jet):
            a, b = self.coeffs, other.coeffs
            return Jet(tuple(a[i] - b[i] for i in range(_N)))
        c = self.coeffs
        return Jet((c[0] - other, c[1], c[2], c[3], c[4]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            a, b = self.coeffs, other.coeffs
            return Jet(tuple(
                sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(_N)))
        return Jet(tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            return self * (1.0 / other)
        return _divide(self, other)

    def __rtruediv__(self, other):
        return constant(other) / self


def variable(t: float) -> Jet:
    """Jet of the identity function at ``t``."""
    return Jet((float(t), 1.0, 0.0, 0.0, 0.0))


def constant(c: float) -> Jet:
    return Jet((float(c), 0.0, 0.0, 0.0, 0.0))


def _divide(num: Jet, den: Jet) -> Jet:
    a, b = num.coeffs, den.coeffs
    if abs(b[0]) <= DIV_FLOOR:
        raise DivisionNearZero("jet division by a series with ~zero constant term")
    q = [0.0] * _N
    for k in range(_N):
        acc = a[k]
        for j in range(k):
            acc -= q[j] * b[k - j]
        q[k] = acc / b[0]
    return Jet(tuple(q))


def sqrt(j: Jet) -> Jet:
    a = j.coeffs
    if a[0] <= 0.0:
        raise SqrtNonPositive(f"jet sqrt of non-positive value {a[0]!r}")
    r = [0.0] * _N
    r[0] = math.sqrt(a[0])
    for k in range(1, _N):
        acc = a[k]
        for i in range(1, k):
            acc -= r[i] * r[k - i]
        r[k] = acc / (2.0 * r[0])
    return Jet(tuple(r))


def exp(j: Jet) -> Jet:
    a = j.coeffs
    b = [0.0] * _N
    b[0] = math.exp(a[0])
    for k in range(1, _N):
        b[k] = sum(i * a[i] * b[k - i] for i in range(1, k + 1)) / k
    return Jet(tuple(b))


def sincos(j: Jet) -> tuple[Jet, Jet]:
    """sin and cos of a jet, computed jointly via their coupled recurrence."""
    a = j.coeffs
    s = [0.0] * _N
    c = [0.0] * _N
    s[0] = math.sin(a[0])
    c[0] = math.cos(a[0])
    for k in range(1, _N):
        s[k] = sum(i * a[i] * c[k - i] for i in range(1, k + 1)) / k
        c[k] = -sum(i * a[i] * s[k - i] for i in range(1, k + 1)) / k
    return Jet(tuple(s)), Jet(tuple(c))


def sin(j: Jet) -> Jet:
    return sincos(j)[0]


def cos(j: Jet) -> Jet:
    return sincos(j)[1]


def sinhcosh(j: Jet) -> tuple[Jet, Jet]:
    a = j.coeffs
    s = [0.0] * _N
    c = [0.0] * _N
    s[0] = math.sinh(a[0])
    c[0] = math.cosh(a[0])
    for k in range(1, _N):
        s[k] = sum(i * a[i] * c[k - i] for i in range(1, k + 1)) / k
        c[k] = sum(i * a[i] * s[k - i] for i in range(1, k + 1)) / k
    return Jet(tuple(s)), Jet(tuple(c))


def sinh(j: Jet) -> Jet:
    return sinhcosh(j)[0]


def cosh(j: Jet) -> Jet:
    return sinhcosh(j)[1]


def powi(j: Jet, n: int) -> Jet:
    """Integer power by repeated multiplication; negative n goes through 1/j."""
    if n < 0:
        return powi(constant(1.0) / j, -n)
    out = constant(1.0)
    base = j
    while n:
        if n & 1:
            out = out * base
        base = base * base
        n >>= 1
    return out


_ELEMENTARY = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
    "sin": sin,
    "cos": cos,
    "sinh": sinh,
    "cosh": cosh,
    "exp": exp,
    "sqrt": sqrt,
    "powi": powi,
}


def jet_elementary(kind: str, *args):
    """Dispatch an elementary jet operation by name."""
    try:
        fn = _ELEMENTARY[kind]
    except KeyError:
        raise ValueError(f"unknown elementary jet operation {kind!r}") from None
    return fn(*args)


def compose(outer: Jet, inner: Jet) -> Jet:
    """Jet of f(g(s)) where ``outer`` expands f at the point ``inner.value``.

    Horner evaluation in the nilpotent part of ``inner``; exact to order 4.
    """
    a = outer.coeffs
    delta = inner - inner.value
    out = constant(a[ORDER])
    for k in range(ORDER - 1, -1, -1):
        out = out * delta + a[k]
    return out


def reverse(j: Jet, at: float) -> Jet:
    """Compositional inverse: given the jet of s(t) at t0, return t(s) at s(t0).

    ``at`` is t0, the expansion point of ``j`` (a jet does not carry it);
    the result has constant term t0.  Requires a non-vanishing linear
    coefficient.
    """
    _, b1, b2, b3, b4 = j.coeffs
    if abs(b1) <= DIV_FLOOR:
        raise DivisionNearZero("series reversion with ~zero linear coefficient")
    c1 = 1.0 / b1
    c2 = -b2 / b1 ** 3
    c3 = (2.0 * b2 * b2 - b1 * b3) / b1 ** 5
    c4 = (5.0 * b1 * b2 * b3 - b1 * b1 * b4 - 5.0 * b2 ** 3) / b1 ** 7
    return Jet((float(at), c1, c2, c3, c4))
