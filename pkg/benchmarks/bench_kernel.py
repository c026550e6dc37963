#!/usr/bin/env python3
"""Benchmark the compiled evaluation kernel against the pure-Python twin.

Two workloads:
  * micro: raw enclosure evaluations of a degree-4006 family polynomial at a
    50-bit dyadic point (the bisection inner loop);
  * sweep: end-to-end certified root isolation over a slice of the family,
    with the kernel swapped in via the roots module.

Both kernels are bit-identical by contract; this script also asserts that on
the fly.  Run:  python benchmarks/bench_kernel.py [--p-max 200]
"""

import argparse
import time
from fractions import Fraction

from magicfiber import _kernel_py
from magicfiber import family_poly, roots

try:
    from magicfiber import _kernel_cy
except ImportError:
    _kernel_cy = None


def bench_micro(kernel, repeats=2000):
    f = family_poly(2, 1000)
    exps = f.exponents()
    coeffs = f.coefficients()
    tnum = (1 << 50) + 123456789  # ~1.0000001, near the root scale
    t0 = time.perf_counter()
    out = None
    for _ in range(repeats):
        out = kernel.eval_enclosure(exps, coeffs, tnum, 50, 128)
    return time.perf_counter() - t0, out


def bench_sweep(kernel, p_max):
    saved = roots.eval_enclosure
    roots.eval_enclosure = kernel.eval_enclosure
    try:
        t0 = time.perf_counter()
        out = []
        for p in range(2, p_max + 1):
            r = roots.unique_root_gt1(family_poly(2, p), Fraction(1, 10**12))
            out.append((r.lo, r.hi))
        return time.perf_counter() - t0, out
    finally:
        roots.eval_enclosure = saved


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p-max", type=int, default=200)
    parser.add_argument("--repeats", type=int, default=2000)
    args = parser.parse_args()

    if _kernel_cy is None:
        print("compiled kernel not available; timing the pure-Python kernel only")
    kernels = [("python", _kernel_py)] + (
        [("cython", _kernel_cy)] if _kernel_cy else []
    )

    print(f"micro: {args.repeats} enclosure evaluations, degree 4006, 128 bits")
    micro = {}
    for name, kernel in kernels:
        dt, out = bench_micro(kernel, args.repeats)
        micro[name] = (dt, out)
        print(f"  {name:7s} {dt:8.3f}s  ({dt / args.repeats * 1e6:8.1f} us/eval)")
    if len(micro) == 2:
        assert micro["python"][1] == micro["cython"][1], "kernels disagree"
        print(f"  speedup {micro['python'][0] / micro['cython'][0]:.2f}x")

    print(f"sweep: certified roots for p = 2..{args.p_max}, tol 1e-12")
    sweep = {}
    for name, kernel in kernels:
        dt, out = bench_sweep(kernel, args.p_max)
        sweep[name] = (dt, out)
        n = args.p_max - 1
        print(f"  {name:7s} {dt:8.3f}s  ({dt / n * 1e3:8.2f} ms/root)")
    if len(sweep) == 2:
        assert sweep["python"][1] == sweep["cython"][1], "kernels disagree"
        print(f"  speedup {sweep['python'][0] / sweep['cython'][0]:.2f}x")


if __name__ == "__main__":
    main()
