"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Criterion 7 is known to fail: it encodes the originally targeted asymptotic
window (normalized ratios decreasing into (2.0, 2.4); two-sided bracket with
exponents 0.9/1.1 holding from some threshold below 2000).  The certified
computation, cross-checked by exact sign evaluation, Sturm isolation, and
dense numpy roots, shows the true ratios increase toward 2 from below
(about 1.2992 at p = 10^4) and the narrow bracket fails throughout any desk
scale sweep (its true threshold is around e^50).  The assertion is kept as
targeted rather than rewritten around the computed outcome; the verified
trend lives in test_asymptotics.py and the `verify asymp` suite.
"""

import io
import json
import math
import time
from contextlib import redirect_stdout
from fractions import Fraction

from magicfiber import (
    b_family,
    bracket_check,
    condition_star,
    condition_star_brute,
    condition_star_star,
    dilatation_poly,
    family_class,
    family_fiber_data,
    family_poly,
    fiber_data,
    euler_poincare_check,
    make_poly,
    ratio_table,
    sign_variations,
    sturm_count,
    unique_root_gt1,
    upper_bound_table,
)
from magicfiber.cli import main as cli_main
from magicfiber.verify import iter_cone_classes, sample_cone_classes


def _report(num, label, t0, budget):
    elapsed = time.perf_counter() - t0
    assert elapsed < budget, f"criterion {num} exceeded {budget}s budget: {elapsed:.2f}s"
    print(f"ACCEPTANCE criterion {num} PASS ({label}, {elapsed:.2f}s)")


def test_criterion_1_root_regression():
    t0 = time.perf_counter()
    quartic = make_poly([(4, 1), (3, -2), (1, -2), (0, 1)])
    r = unique_root_gt1(quartic, Fraction(1, 10**6))
    assert abs(r.value - Fraction("2.2966")) <= Fraction("5e-4")
    quad = make_poly([(2, 1), (1, -4), (0, 1)])
    r = unique_root_gt1(quad, Fraction(1, 10**10))
    lo_off = r.value - 2 - Fraction(1, 10**9)
    hi_off = r.value - 2 + Fraction(1, 10**9)
    assert lo_off > 0 and lo_off**2 < 3 < hi_off**2  # within 1e-9 of 2+sqrt(3)
    _report(1, "root regressions", t0, 1.0)


def test_criterion_2_polynomial_identity():
    t0 = time.perf_counter()
    checked = 0
    for g in range(51):
        for p in range(51):
            assert family_poly(g, p) == dilatation_poly(
                (p + g + 1, 2 * p + 1, p - g)
            )
            checked += 1
    assert checked == 2601
    _report(2, "2601 identities", t0, 5.0)


def test_criterion_3_topology_oracle():
    t0 = time.perf_counter()
    swept = 0
    for c in iter_cone_classes(60):
        fd = fiber_data(c)
        assert fd.n_total == fd.b_alpha + fd.b_beta + fd.b_gamma
        assert (fd.norm - fd.n_total) % 2 == 0 and fd.genus >= 0
        assert 2 * fd.genus == 2 - fd.n_total + fd.norm
        assert euler_poincare_check(fd)
        swept += 1
    assert swept > 10_000
    pairs = 0
    for g in range(61):
        for p in range(61):
            fc = family_class(g, p)
            if fc.primitive:
                assert family_fiber_data(g, p) == fiber_data(fc.fibered_class)
                pairs += 1
    assert pairs > 1000
    _report(3, f"{swept} classes, {pairs} family pairs", t0, 30.0)


def test_criterion_4_root_count_property():
    t0 = time.perf_counter()
    classes = sample_cone_classes(500, max_norm=100)
    for c in classes:
        f = dilatation_poly(c)
        assert f.degree() <= 200
        assert sign_variations(f) == 2
        assert sturm_count(f, 0, None) == 2
        assert sturm_count(f, 1, None) == 1
    _report(4, "500 sampled classes", t0, 60.0)


def test_criterion_5_condition_star():
    t0 = time.perf_counter()
    assert condition_star(4) == (True, None)
    assert condition_star(7) == (False, 5)
    for g in range(5, 10_001):
        assert condition_star(g)[0] == condition_star_star(g)
    for g in range(2, 2_001):
        direct = condition_star_brute(g)
        assert condition_star(g) == direct
        assert condition_star_brute(g, full_period=True)[0] == direct[0]
    _report(5, "g <= 10000 equivalence, g <= 2000 oracle", t0, 10.0)


def test_criterion_6_bound_tables():
    t0 = time.perf_counter()
    for g in (2, 3, 4, 5, 6, 8, 9):
        rows = upper_bound_table(g, 3, 500)
        missing = [row.n for row in rows if row.record is None]
        assert not missing, f"g={g}: no witness for n in {missing[:5]}"
    rows7 = upper_bound_table(7, 3, 500)
    assert any(row.pruned_p for row in rows7)
    _report(6, "g in {2..6,8,9} full, g=7 pruned", t0, 120.0)


def test_criterion_7_asymptotic_trend():
    t0 = time.perf_counter()
    fam = b_family(2)
    table = ratio_table(fam, 2, 4, [10, 100, 1000, 10000])
    for row in table.rows:
        print(
            f"  computed ratio at p={row.m}: "
            f"[{row.ratio_lo:.10f}, {row.ratio_hi:.10f}]"
        )
    report = bracket_check(fam, "0.9", "1.1", 2, 2000)
    print(
        f"  computed bracket(0.9, 1.1) on [2, 2000]: "
        f"{len(report.failures)} failures, threshold {report.threshold}"
    )
    elapsed = time.perf_counter() - t0
    assert elapsed < 300.0, f"criterion 7 exceeded 300s budget: {elapsed:.2f}s"
    assert table.strictly_decreasing, "ratios are not strictly decreasing"
    last = table.rows[-1]
    assert 2.0 < last.ratio_lo and last.ratio_hi < 2.4, (
        f"ratio at p=10^4 is [{last.ratio_lo:.6f}, {last.ratio_hi:.6f}], "
        "not in (2.0, 2.4)"
    )
    assert report.holds_tail and report.threshold <= 2000
    _report(7, "asymptotic trend", t0, 300.0)


def _run_cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(list(argv))
    return code, buf.getvalue()


def test_criterion_8_determinism():
    t0 = time.perf_counter()
    commands = [
        ("bounds", "-g", "2", "-n", "3..80", "--format", "csv"),
        ("bounds", "-g", "7", "-n", "3..40", "--format", "json"),
        ("asymp", "bracket", "--m-range", "2..60", "--format", "json"),
        ("asymp", "ratio", "--points", "10,100,1000", "--format", "csv"),
    ]
    for argv in commands:
        code1, out1 = _run_cli(*argv, "--jobs", "1")
        code8, out8 = _run_cli(*argv, "--jobs", "8")
        assert code1 == code8 == 0
        assert out1 == out8, f"output differs across --jobs for {argv}"
        if "json" in argv:
            parsed = json.loads(out1)
            assert json.dumps(parsed, indent=2) + "\n" == out1
    _report(8, "byte-identical across --jobs", t0, 120.0)
