"""Exact Sturm-chain root counting over the integers.

This is the validation oracle for the Descartes/bisection route, so it stays
independent of the interval kernel: dense integer polynomials, pseudo
remainders with content removal (a primitive remainder sequence, which keeps
coefficient growth polynomial), and exact sign evaluation at rational points.
Multiplying a chain element by a positive constant never changes sign
variation counts, which is what makes the all-integer chain legitimate.

Counts are of distinct real roots in the half-open interval (a, b]; either
endpoint may be None for an unbounded side.  Non-square-free input is
reduced to its square-free part first.  Degrees are capped at oracle scale.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .polynomials import SparsePoly

__all__ = ["STURM_DEGREE_CAP", "sturm_count"]

STURM_DEGREE_CAP = 200


def _deg(p: list[int]) -> int:
    return len(p) - 1


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _derivative(p: list[int]) -> list[int]:
    return _trim([i * p[i] for i in range(1, len(p))])


def _primitive(p: list[int]) -> list[int]:
    """Divide out the (positive) content, preserving signs."""
    g = 0
    for c in p:
        g = math.gcd(g, c)
        if g == 1:
            return list(p)
    return [c // g for c in p]


def _pseudo_rem(f: list[int], g: list[int]) -> tuple[list[int], int]:
    """Pseudo remainder of f by g, with the number of lc(g) scalings applied.

    Returns (r, steps) with lc(g)**steps * f = q*g + r for some q.
    """
    lc = g[-1]
    dg = _deg(g)
    r = list(f)
    steps = 0
    while r and _deg(r) >= dg:
        steps += 1
        c = r[-1]
        k = _deg(r) - dg
        r = [lc * ri for ri in r]
        for i, gi in enumerate(g):
            r[k + i] -= c * gi
        _trim(r)
    return r, steps


def _sturm_chain(p: list[int]) -> list[list[int]]:
    chain = [list(p), _derivative(p)]
    if not chain[-1]:
        return chain[:1]
    while _deg(chain[-1]) > 0:
        r, steps = _pseudo_rem(chain[-2], chain[-1])
        if not r:
            break
        # The true next element is -r / lc**steps; only the sign of the
        # divisor matters after taking the primitive part.
        lc = chain[-1][-1]
        if lc > 0 or steps % 2 == 0:
            r = [-c for c in r]
        chain.append(_primitive(r))
    return chain


def _exact_div(f: list[int], g: list[int]) -> list[int]:
    """Exact polynomial division, asserting zero remainder."""
    r = list(f)
    q = [0] * (_deg(f) - _deg(g) + 1)
    lc = g[-1]
    while r and _deg(r) >= _deg(g):
        c, rem = divmod(r[-1], lc)
        if rem:
            raise ArithmeticError("division is not exact")
        k = _deg(r) - _deg(g)
        q[k] = c
        for i, gi in enumerate(g):
            r[k + i] -= c * gi
        _trim(r)
    if r:
        raise ArithmeticError("division is not exact")
    return q


def _sign_at(p: list[int], num: int, den: int) -> int:
    # sign of p(num/den) via the homogenized integer value
    if den == 1:
        acc = 0
        for c in reversed(p):
            acc = acc * num + c
    else:
        d = _deg(p)
        acc = 0
        npow = 1
        dpows = [1] * (d + 1)
        for j in range(1, d + 1):
            dpows[j] = dpows[j - 1] * den
        for i, c in enumerate(p):
            acc += c * npow * dpows[d - i]
            npow *= num
    return (acc > 0) - (acc < 0)


def _variations(signs) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def _variations_at(chain, bound) -> int:
    if bound is None:
        raise ValueError("internal: use the infinity variants")
    num, den = bound.numerator, bound.denominator
    return _variations(_sign_at(q, num, den) for q in chain)


def _variations_at_inf(chain, positive: bool) -> int:
    if positive:
        return _variations((q[-1] > 0) - (q[-1] < 0) for q in chain)
    return _variations(
        ((q[-1] > 0) - (q[-1] < 0)) * (-1 if _deg(q) % 2 else 1) for q in chain
    )


def _as_bound(x):
    if x is None:
        return None
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def sturm_count(f: SparsePoly, lower=None, upper=None) -> int:
    """Distinct real roots of f in (lower, upper].

    ``lower=None`` / ``upper=None`` mean unbounded below / above.  Multiple
    roots are counted once (the square-free part is used).  Degrees above
    STURM_DEGREE_CAP are rejected: dense chains are an oracle-scale tool.
    """
    if f.is_zero:
        raise ValueError("cannot count roots of the zero polynomial")
    if f.degree() > STURM_DEGREE_CAP:
        raise ValueError(f"degree {f.degree()} exceeds the oracle cap {STURM_DEGREE_CAP}")
    lower = _as_bound(lower)
    upper = _as_bound(upper)
    if lower is not None and upper is not None and lower >= upper:
        raise ValueError("need lower < upper")
    if f.degree() == 0:
        return 0
    p = _primitive(f.dense_ascending())
    chain = _sturm_chain(p)
    if _deg(chain[-1]) > 0:
        # nontrivial gcd(f, f'): reduce to the square-free part
        p = _exact_div(p, _primitive(chain[-1]))
        if p[-1] < 0:
            p = [-c for c in p]
        chain = _sturm_chain(p)
    va = (
        _variations_at_inf(chain, positive=False)
        if lower is None
        else _variations_at(chain, lower)
    )
    vb = (
        _variations_at_inf(chain, positive=True)
        if upper is None
        else _variations_at(chain, upper)
    )
    count = va - vb
    if count < 0:
        raise ArithmeticError("Sturm variation count decreased; oracle bug")
    return count
