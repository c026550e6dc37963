"""Desk-scale verification of the root-growth claims for polynomial families.

A family here is P_m(t) = t^(2m+offset) * (t^spread - 1) + 1
- mid(t) * t^m - t^low, for a fixed middle polynomial ``mid`` with positive
integer coefficients.  Whenever the top exponent 2m+offset+spread survives
canonical merging, P_m has exactly one real root above 1, and that root
lambda_m is squeezed between m^(c1/m) and m^(c2/m) for any 0 < c1 < 1 < c2
once m is large.  The tools below verify such statements over finite sweeps
and report the empirical threshold; they never claim the limit itself.

Comparisons against m^(c/m) are exact: for c = a/b the inequality
lambda > m^(c/m) is equivalent to lambda^(b*m) > m^a, which is decided with
outward-rounded integer interval powers of the certified bracket endpoints
(refining the root bracket whenever the threshold falls inside it).
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from ._kernel import pow_enclosure
from .polynomials import SparsePoly, make_poly
from .roots import (
    DEFAULT_TOL,
    CertifiedRoot,
    PrecisionError,
    _as_tol,
    as_dyadic,
    unique_root_gt1,
)

__all__ = [
    "PolyFamily",
    "b_family",
    "BracketReport",
    "bracket_check",
    "RatioRow",
    "RatioTable",
    "ratio_table",
]

# Display padding for log-based ratio bounds: absolute float error of the
# conversions and logs is ~1e-15; the root bracket dominates by orders of
# magnitude at default tolerance.
_RATIO_PAD = 1e-11


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


@dataclass(frozen=True)
class PolyFamily:
    """Coefficient data of the family P_m; instantiate at a given m."""

    offset: int  # added to 2m in the two leading exponents
    spread: int  # gap between the two leading exponents
    low: int  # exponent of the lone low-order subtracted term
    mid: SparsePoly  # positive-coefficient middle polynomial, shifted by t^m

    def __post_init__(self):
        if self.offset < 0 or self.spread < 1 or self.low < 1:
            raise ValueError("need offset >= 0, spread >= 1, low >= 1")
        if self.mid.is_zero or any(c < 1 for c in self.mid.coefficients()):
            raise ValueError("mid must be nonzero with all coefficients >= 1")

    def instantiate(self, m: int) -> SparsePoly:
        """Canonical P_m; errors if the leading term does not survive merging."""
        if m < 0:
            raise ValueError("m must be nonnegative")
        lead = 2 * m + self.offset + self.spread
        others = [2 * m + self.offset, self.low, 0]
        terms = [(lead, 1), (2 * m + self.offset, -1), (self.low, -1), (0, 1)]
        for e, c in self.mid.terms:
            terms.append((m + e, -c))
            others.append(m + e)
        f = make_poly(terms)
        if f.is_zero or f.degree() != lead or f.leading_coefficient() != 1:
            bad = max(e for e in others if e >= lead)
            raise ValueError(
                f"leading term t^{lead} is not strict at m={m}: "
                f"exponent {bad} collides or dominates"
            )
        return f


def b_family(g: int) -> PolyFamily:
    """The family whose member at m = p is family_poly(g, p)."""
    if g < 0:
        raise ValueError("g must be nonnegative")
    return PolyFamily(
        offset=1, spread=2 * g + 1, low=2 * g + 1, mid=make_poly([(g + 1, 2)])
    )


def _dyadic_pow_cmp(x: Fraction, e: int, rhs: int) -> int:
    """Exact comparison of x**e against the integer rhs (x a dyadic > 0)."""
    num, k = as_dyadic(x)
    prec = 192
    for _ in range(3):
        lo, hi = pow_enclosure(num, k, e, max(prec, k))
        target = rhs << max(prec, k)
        if lo > target:
            return 1
        if hi < target:
            return -1
        prec *= 2
    lhs = num**e
    scaled = rhs << (k * e)
    return (lhs > scaled) - (lhs < scaled)


def _cmp_root_to_power(
    f: SparsePoly, root: CertifiedRoot, m: int, c: Fraction, tol: Fraction
) -> tuple[int, CertifiedRoot]:
    """Sign of lambda - m^(c/m) for the root of f, refining as needed."""
    if m == 1:
        return 1, root  # threshold is 1 and the root exceeds 1
    a, b = c.numerator, c.denominator
    e = b * m
    rhs = m**a
    for _ in range(64):
        # lambda lies strictly inside (lo, hi), so a weak comparison at an
        # endpoint already decides strictly for lambda itself.
        if _dyadic_pow_cmp(root.lo, e, rhs) >= 0:
            return 1, root
        if _dyadic_pow_cmp(root.hi, e, rhs) <= 0:
            return -1, root
        tol = tol / 2
        root = unique_root_gt1(f, tol)
    raise PrecisionError(f"could not separate the root from m^({c}/{m})")


@dataclass(frozen=True)
class BracketReport:
    """Outcome of checking m^(c_lower/m) < lambda_m < m^(c_upper/m) on a range."""

    c_lower: Fraction
    c_upper: Fraction
    m_lo: int
    m_hi: int
    failures: tuple[int, ...]

    @property
    def largest_failure(self) -> int | None:
        return self.failures[-1] if self.failures else None

    @property
    def threshold(self) -> int | None:
        """Least M with the bracket holding on [M, m_hi]; None if it fails at m_hi."""
        if not self.failures:
            return self.m_lo
        if self.failures[-1] == self.m_hi:
            return None
        return self.failures[-1] + 1

    @property
    def holds_tail(self) -> bool:
        return self.threshold is not None


def _bracket_ok(fam: PolyFamily, m: int, c1: Fraction, c2: Fraction, tol) -> bool:
    f = fam.instantiate(m)
    root = unique_root_gt1(f, tol)
    s1, root = _cmp_root_to_power(f, root, m, c1, tol)
    if s1 <= 0:
        return False
    s2, _ = _cmp_root_to_power(f, root, m, c2, tol)
    return s2 < 0


def _bracket_ok_args(args) -> bool:
    return _bracket_ok(*args)


def bracket_check(
    fam: PolyFamily,
    c_lower,
    c_upper,
    m_lo: int,
    m_hi: int,
    tol=DEFAULT_TOL,
    jobs: int = 1,
) -> BracketReport:
    """Certified per-m verdicts of the two-sided bracket over [m_lo, m_hi]."""
    c1 = _as_fraction(c_lower)
    c2 = _as_fraction(c_upper)
    if not 0 < c1 < 1 < c2:
        raise ValueError("need 0 < c_lower < 1 < c_upper")
    if not 1 <= m_lo <= m_hi:
        raise ValueError("need 1 <= m_lo <= m_hi")
    tol = _as_tol(tol)
    ms = range(m_lo, m_hi + 1)
    if jobs <= 1:
        oks = [_bracket_ok(fam, m, c1, c2, tol) for m in ms]
    else:
        tasks = [(fam, m, c1, c2, tol) for m in ms]
        chunk = max(1, len(tasks) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            oks = list(ex.map(_bracket_ok_args, tasks, chunksize=chunk))
    failures = tuple(m for m, ok in zip(ms, oks) if not ok)
    return BracketReport(c_lower=c1, c_upper=c2, m_lo=m_lo, m_hi=m_hi, failures=failures)


@dataclass(frozen=True)
class RatioRow:
    m: int
    n: Fraction
    root: CertifiedRoot
    ratio_lo: float
    ratio_hi: float


@dataclass(frozen=True)
class RatioTable:
    """Rows of (q*m+v) * log(lambda_m) / log(q*m+v), with trend metadata.

    The trend flags are certified across successive rows (each ratio
    interval entirely below, resp. above, the previous one); no limit is
    claimed, only the computed values.
    """

    q: Fraction
    v: Fraction
    rows: tuple[RatioRow, ...]
    strictly_decreasing: bool
    strictly_increasing: bool


def _ratio_bounds(n: Fraction, root: CertifiedRoot) -> tuple[float, float]:
    nf = float(n)
    ln = math.log(nf)
    lo = nf * math.log(float(root.lo)) / ln
    hi = nf * math.log(float(root.hi)) / ln
    return lo - _RATIO_PAD, hi + _RATIO_PAD


def _ratio_row(fam: PolyFamily, m: int, q: Fraction, v: Fraction, tol) -> RatioRow:
    root = unique_root_gt1(fam.instantiate(m), tol)
    n = q * m + v
    lo, hi = _ratio_bounds(n, root)
    return RatioRow(m=m, n=n, root=root, ratio_lo=lo, ratio_hi=hi)


def _ratio_row_args(args) -> RatioRow:
    return _ratio_row(*args)


def ratio_table(
    fam: PolyFamily, q, v, m_list, tol=DEFAULT_TOL, jobs: int = 1
) -> RatioTable:
    """Normalized-entropy ratios over the given m values (order preserved)."""
    q = _as_fraction(q)
    v = _as_fraction(v)
    if q == 0:
        raise ValueError("q must be nonzero")
    ms = [int(m) for m in m_list]
    for m in ms:
        if q * m + v <= 1:
            raise ValueError(f"q*m+v must exceed 1 (fails at m={m})")
    tol = _as_tol(tol)
    if jobs <= 1 or len(ms) <= 1:
        rows = [_ratio_row(fam, m, q, v, tol) for m in ms]
    else:
        tasks = [(fam, m, q, v, tol) for m in ms]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_ratio_row_args, tasks))
    decreasing = all(
        rows[i + 1].ratio_hi < rows[i].ratio_lo for i in range(len(rows) - 1)
    )
    increasing = all(
        rows[i + 1].ratio_lo > rows[i].ratio_hi for i in range(len(rows) - 1)
    )
    return RatioTable(
        q=q,
        v=v,
        rows=tuple(rows),
        strictly_decreasing=decreasing,
        strictly_increasing=increasing,
    )
