# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of the dyadic interval-evaluation kernel.

Semantically identical to ``_kernel_py``: the integers stay Python objects
(arbitrary precision is required), the win is removing interpreter dispatch
from the inner loops.  Both kernels must return bit-identical enclosures.
"""


cdef inline tuple _base_interval(object tnum, long long tk, long long prec):
    cdef long long sh
    cdef object t
    if prec >= tk:
        t = tnum << (prec - tk)
        return t, t
    sh = tk - prec
    return tnum >> sh, -((-tnum) >> sh)


def eval_enclosure(list exps, list coeffs, tnum, long long tk, long long prec):
    """Enclose sum(coeffs[i] * t**exps[i]) at t = tnum / 2**tk > 0.

    Returns integers (lo, hi) with the exact value inside
    [lo / 2**prec, hi / 2**prec].  Requires tnum > 0 and tk >= 0.
    """
    cdef Py_ssize_t i, n
    cdef object t_lo, t_hi, acc_lo, acc_hi, c, plo, phi
    t_lo, t_hi = _base_interval(tnum, tk, prec)
    acc_lo = 0
    acc_hi = 0
    n = len(exps)
    for i in range(n):
        plo, phi = _pow_enclosure(t_lo, t_hi, exps[i], prec)
        c = coeffs[i]
        if c >= 0:
            acc_lo = acc_lo + c * plo
            acc_hi = acc_hi + c * phi
        else:
            acc_lo = acc_lo + c * phi
            acc_hi = acc_hi + c * plo
    return acc_lo, acc_hi


def pow_enclosure(tnum, long long tk, e, long long prec):
    """Enclose (tnum / 2**tk) ** e; same representation as eval_enclosure."""
    t_lo, t_hi = _base_interval(tnum, tk, prec)
    return _pow_enclosure(t_lo, t_hi, e, prec)


cdef tuple _pow_enclosure(object blo, object bhi, object e_obj, long long prec):
    cdef unsigned long long e = e_obj
    cdef object rlo, rhi, one
    cdef bint have = False
    if e == 0:
        one = (<object> 1) << prec  # object shift: 1 << 128 overflows in C
        return one, one
    rlo = rhi = 0
    while True:
        if e & 1:
            if not have:
                rlo = blo
                rhi = bhi
                have = True
            else:
                rlo = (rlo * blo) >> prec
                rhi = -((-(rhi * bhi)) >> prec)
        e >>= 1
        if not e:
            return rlo, rhi
        blo = (blo * blo) >> prec
        bhi = -((-(bhi * bhi)) >> prec)
