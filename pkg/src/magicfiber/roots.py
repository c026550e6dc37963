"""Certified sign evaluation and isolation of the unique root above 1.

Every in-scope polynomial is monic with constant term +1 and negative value
at t = 1, and has exactly one real root above 1.  That root is bracketed by
a doubling search upward from 1 followed by plain bisection; every accepted
step is backed by a certified sign.

Signs come from fixed-point interval arithmetic on exact integers: the point
t is an exact dyadic rational, each term t**e is enclosed by binary powering
with outward rounding at ``bits`` of fractional precision, and a sign is
certified only when the resulting enclosure excludes zero.  When it does not
(cancellation near t = 1 grows with the degree), the precision is doubled up
to a ceiling, after which ``PrecisionError`` is raised.  Because every
decision depends only on true signs, brackets are bitwise reproducible and
independent of the precision-escalation path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._kernel import eval_enclosure
from .polynomials import SparsePoly

__all__ = [
    "DEFAULT_BITS",
    "DEFAULT_MAX_BITS",
    "DEFAULT_TOL",
    "PrecisionError",
    "Enclosure",
    "CertifiedRoot",
    "evaluate_certified",
    "unique_root_gt1",
    "as_dyadic",
]

DEFAULT_BITS = 128
DEFAULT_MAX_BITS = 1 << 20
DEFAULT_TOL = Fraction(1, 10**12)


class PrecisionError(ArithmeticError):
    """Sign certification failed below the configured precision ceiling."""


def as_dyadic(t) -> tuple[int, int]:
    """Decompose an exact dyadic value as (num, k) with t = num / 2**k, k >= 0.

    Accepts int, float (floats are exact dyadics), and Fraction with a
    power-of-two denominator.
    """
    if isinstance(t, int):
        return (t, 0)
    if isinstance(t, float):
        t = Fraction(t)
    if isinstance(t, Fraction):
        den = t.denominator
        if den & (den - 1):
            raise ValueError(f"{t} is not a dyadic rational")
        return (t.numerator, den.bit_length() - 1)
    raise TypeError(f"expected a dyadic rational, got {type(t).__name__}")


def _dyadic_fraction(num: int, k: int) -> Fraction:
    return Fraction(num, 1 << k)


def _midpoint(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    km = max(a[1], b[1])
    num = (a[0] << (km - a[1])) + (b[0] << (km - b[1]))
    k = km + 1
    while k > 0 and not (num & 1):
        num >>= 1
        k -= 1
    return (num, k)


@dataclass(frozen=True)
class Enclosure:
    """An interval certified to contain the exact value."""

    lo: Fraction
    hi: Fraction

    @property
    def sign(self):
        """+1, -1, 0 (exact zero), or None when the sign is undetermined."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == 0 == self.hi:
            return 0
        return None


@dataclass(frozen=True)
class CertifiedRoot:
    """A bracket (lo, hi) around a root, with certified opposite signs.

    ``lo`` and ``hi`` are exact dyadic rationals with lo > 1 and
    hi - lo <= 2*tol; ``value`` is the bracket midpoint.  The sign
    certificates are recomputable via ``evaluate_certified``.
    """

    lo: Fraction
    hi: Fraction
    value: Fraction
    tol: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi


def evaluate_certified(f: SparsePoly, t, bits: int = DEFAULT_BITS) -> Enclosure:
    """Enclose f(t) at an exact dyadic t > 0 with ``bits`` of precision.

    The sign of the result is certified whenever the enclosure excludes
    zero; otherwise callers escalate ``bits`` and retry.
    """
    num, k = as_dyadic(t)
    if num <= 0:
        raise ValueError("evaluation point must be positive")
    if bits < 1:
        raise ValueError("bits must be positive")
    if f.is_zero:
        return Enclosure(Fraction(0), Fraction(0))
    lo, hi = eval_enclosure(f.exponents(), f.coefficients(), num, k, bits)
    return Enclosure(_dyadic_fraction(lo, bits), _dyadic_fraction(hi, bits))


def _certified_sign(exps, coeffs, num, k, bits, max_bits) -> int:
    prec = min(max(bits, k + 64), max_bits)
    while True:
        lo, hi = eval_enclosure(exps, coeffs, num, k, prec)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        if lo == 0 == hi:
            return 0
        if prec >= max_bits:
            raise PrecisionError(
                f"sign undetermined at the {max_bits}-bit precision ceiling"
            )
        prec = min(prec * 2, max_bits)


def _as_tol(tol) -> Fraction:
    if isinstance(tol, float):
        tol = Fraction(repr(tol))
    else:
        tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    return tol


def unique_root_gt1(
    f: SparsePoly,
    tol=DEFAULT_TOL,
    *,
    bits: int = DEFAULT_BITS,
    max_bits: int = DEFAULT_MAX_BITS,
) -> CertifiedRoot:
    """Certified bracket of the unique real root of f above 1.

    Preconditions: f is monic with f(1) < 0 (the shape shared by all
    dilatation polynomials).  The bracket is found by doubling from (1, 2]
    then bisecting dyadic midpoints until the width is at most 2*tol and the
    lower endpoint exceeds 1; every step is sign-certified.
    """
    tol = _as_tol(tol)
    if f.is_zero or f.degree() < 1:
        raise ValueError("need a nonconstant polynomial")
    if f.leading_coefficient() != 1:
        raise ValueError("leading coefficient must be +1")
    if f.at_one() >= 0:
        raise ValueError("f(1) must be negative")
    exps = f.exponents()
    coeffs = f.coefficients()

    def sign_at(point: tuple[int, int]) -> int:
        return _certified_sign(exps, coeffs, point[0], point[1], bits, max_bits)

    b = 2
    while True:
        s = sign_at((b, 0))
        if s > 0:
            break
        if s == 0:
            return _exact_hit(f, (b, 0), tol, bits, max_bits)
        b *= 2
    lo = (1, 0)
    hi = (b, 0)
    two_tol = 2 * tol
    while (
        _dyadic_fraction(*hi) - _dyadic_fraction(*lo) > two_tol
        or _dyadic_fraction(*lo) <= 1
    ):
        mid = _midpoint(lo, hi)
        s = sign_at(mid)
        if s == 0:
            return _exact_hit(f, mid, tol, bits, max_bits)
        if s < 0:
            lo = mid
        else:
            hi = mid
    flo = _dyadic_fraction(*lo)
    fhi = _dyadic_fraction(*hi)
    return CertifiedRoot(lo=flo, hi=fhi, value=(flo + fhi) / 2, tol=tol)


def _exact_hit(f, point, tol, bits, max_bits):
    # The bisection landed exactly on the root (possible only for dyadic
    # roots, e.g. t - 2); return a valid bracket straddling it.
    exps = f.exponents()
    coeffs = f.coefficients()
    root = _dyadic_fraction(*point)
    k = 1
    while Fraction(1, 1 << k) > tol / 2 or root - Fraction(1, 1 << k) <= 1:
        k += 1
    num, pk = point
    scale = max(pk, k)
    base = num << (scale - pk)
    off = 1 << (scale - k)
    lo = (base - off, scale)
    hi = (base + off, scale)
    s_lo = _certified_sign(exps, coeffs, lo[0], lo[1], bits, max_bits)
    s_hi = _certified_sign(exps, coeffs, hi[0], hi[1], bits, max_bits)
    if s_lo >= 0 or s_hi <= 0:
        raise ValueError(f"root at {root} is not a simple upward crossing")
    flo = _dyadic_fraction(*lo)
    fhi = _dyadic_fraction(*hi)
    return CertifiedRoot(lo=flo, hi=fhi, value=root, tol=tol)
