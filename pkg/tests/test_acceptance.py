"""Acceptance criteria; each test prints one PASS/FAIL line.

Every check is exact combinatorics: zero failures allowed, values compared with ==.
Runtime ceilings are the only numeric tolerances.
"""

import time

import pytest

from g2sca.crystal import B1, crystal_edges, u
from g2sca.rmatrix import bl_b1, r_apply
from g2sca.sca import predict_multi, predict_two_body, run, scattering_report
from g2sca.tensor import is_classical_hw
from g2sca.verify import (SuiteReport, axiom_suite, energy_suite, iso_suite, one_soliton_check,
                          energy_one_check, two_body_check, ybe_suite)

from .conftest import load_rows

ZERO_FAILURES = 0
FIGURE_SECONDS = 1.0
AXIOM_SECONDS = 30.0
TWO_BODY_SECONDS = 300.0

# Arrows of the level-1 crystal graph read off the figure, as (source, target).
FIGURE_ARROWS = {
    1: {("1", "2"), ("2_2", "2_3"), ("3", "0"), ("0", "b3"), ("b2_3", "b2_2"), ("b2", "b1")},
    2: {("2", "2_1"), ("2_1", "2_2"), ("2_2", "3"), ("2_3", "0h"), ("0h", "b2_3"),
        ("b3", "b2_2"), ("b2_2", "b2_1"), ("b2_1", "b2")},
    0: {("b1", "e"), ("e", "1"), ("b2", "3"), ("b2_1", "2_2"), ("b2_2", "2_1"), ("b3", "2")},
}


def verdict(n, title, ok, detail=""):
    print(f"\nACCEPTANCE {n:>2} {'PASS' if ok else 'FAIL'} {title} {detail}".rstrip())
    assert ok, f"criterion {n} failed: {detail}"


def suite_ok(report: SuiteReport):
    return len(report.failures) == ZERO_FAILURES


def test_criterion_01_figure():
    t = time.perf_counter()
    elements = B1.elements()
    arrows = {i: set() for i in (0, 1, 2)}
    for a, b, i in crystal_edges(B1):
        arrows[i].add((a, b))
    dt = time.perf_counter() - t
    ok = len(elements) == 15 and arrows == FIGURE_ARROWS and dt < FIGURE_SECONDS
    verdict(1, "figure-1 fidelity", ok, f"15 nodes, {sum(map(len, arrows.values()))} arrows, {dt:.2f}s")


def test_criterion_02_axioms():
    t = time.perf_counter()
    reports = [axiom_suite(l) for l in (1, 2, 3)]
    dt = time.perf_counter() - t
    ok = all(map(suite_ok, reports)) and dt < AXIOM_SECONDS
    verdict(2, "crystal axioms l=1..3", ok,
            f"{sum(r.instances for r in reports)} checks, {dt:.1f}s")


def test_criterion_03_r_correctness():
    reports = [iso_suite(l) for l in (1, 2, 3)]
    bad = sum(len(r.failures) for r in reports)
    verdict(3, "R bijective, intertwining, insertion agrees l<=3", bad == ZERO_FAILURES,
            f"{sum(r.instances for r in reports)} checks, {bad} failures")


def printed_hw_energy(l, j, letter):
    """The highest-weight energy table as printed, with u_j = (j,0,0,0,0,0)."""
    if j == l and letter == "1":
        return 0
    if (j == l - 1 and letter == "1") or (j == l and letter in ("2", "e")):
        return -1
    return -2


def test_criterion_04_energy():
    reports = [energy_suite(l) for l in (1, 2, 3)]
    bad = sum(len(r.failures) for r in reports)
    table = []
    for l in (1, 2, 3):
        src = bl_b1(l)
        for w in src.elements():
            if is_classical_hw(src, w):
                j = w[0].x1 // 6
                assert w[0] == u(j)
                table.append(r_apply(l, w)[1] == printed_hw_energy(l, j, w[1]))
    ok = bad == ZERO_FAILURES and all(table) and len(table) > 0
    verdict(4, "energy recurrence and highest-weight values", ok,
            f"{sum(r.instances for r in reports)} checks, {len(table)} highest-weight pairs")


def test_criterion_05_yang_baxter():
    reports = [ybe_suite(l) for l in (1, 2)]
    bad = sum(len(r.failures) for r in reports)
    verdict(5, "Yang-Baxter on B_l x B_1 x B_1, l<=2", bad == ZERO_FAILURES,
            f"{sum(r.instances for r in reports)} words")


def test_criterion_06_energy_one_states():
    report = SuiteReport("energy one")
    for L in range(1, 9):
        energy_one_check(L, report)
    verdict(6, "E_1 = 1 states equal the three families, L<=8", suite_ok(report),
            f"{report.instances} checks")


def test_criterion_07_one_soliton():
    report = SuiteReport("one soliton")
    one_soliton_check(4, 5, report)
    verdict(7, "one-soliton speed and energy min(k,l)", suite_ok(report), f"{report.instances} checks")


def test_criterion_08_example1():
    rows = load_rows("example1.txt")
    traced = run(rows[0], 10, 4).rows == rows
    pred = predict_two_body((0, (7, 5)), (-8, (5, 1)))
    rep = scattering_report(rows[0], 10)
    ok = (traced and pred.outgoing == ((-5, (1, 5)), (-3, (11, 1)))
          and (pred.shift_short, pred.shift_long) == (3, 3) and rep.agreement)
    verdict(8, "first example trace and two-body rule", ok, f"phase shifts {rep.phase_shifts}")


def test_criterion_09_example2():
    rows = load_rows("example2.txt")
    traced = run(rows[0], 10, 8).rows == rows
    rep = scattering_report(rows[0], 10)
    want = [(-8, (1, 2)), (-3, (2, 4)), (-3, (5, 4))]
    ok = (traced and predict_multi([(0, (2, 7)), (-5, (5, 1)), (-9, (1, 2))]) == want
          and rep.simulated == want)
    verdict(9, "second example trace and three-body factorization", ok,
            f"separated at t={rep.separated_at}")


def test_criterion_10_example3():
    rows = load_rows("example3.txt")
    traced = run(rows[0], 10, 7).rows == rows
    rep = scattering_report(rows[0], 10)
    with pytest.raises(ValueError):
        predict_multi([(0, (12, 0)), (-8, (0, 6)), (-12, (6, 0))])
    ok = traced and not rep.agreement and rep.separated_at is None
    verdict(10, "third example trace and non-separation verdict", ok, rep.verdict)


def test_criterion_11_two_body_sweep():
    t = time.perf_counter()
    report = SuiteReport("two body")
    two_body_check(((2, 1), (3, 1), (3, 2)), 5, report)
    dt = time.perf_counter() - t
    ok = suite_ok(report) and report.instances == 482 and dt < TWO_BODY_SECONDS
    verdict(11, "two-body scattering sweep", ok, f"{report.instances} cases, {dt:.1f}s")
