import json

import pytest

from g2sca import crystal, rmatrix
from g2sca.crystal import B1, PerfectCrystal
from g2sca.verify import (Bounds, SuiteReport, axiom_suite, check_axioms, clear_caches,
                          energy_one_states, energy_suite, iso_suite, energy_one_families, rbar_suite,
                          run_suite, ybe_sides, ybe_suite)


@pytest.fixture
def fresh_caches():
    clear_caches()
    yield
    clear_caches()


def test_report_pass_flag_tracks_failures():
    r = SuiteReport("x")
    r.check(True, 1, 1, 1)
    assert r.passed
    r.check(False, 2, 3, 4)
    assert not r.passed and r.as_dict()["failures"][0] == {"input": 2, "expected": 3, "got": 4}


def test_reports_merge():
    a, b = SuiteReport("a", 2), SuiteReport("b", 3, [{"input": 0}])
    m = a.merge(b)
    assert m.instances == 5 and not m.passed


def test_axioms_level_one_counts():
    r = axiom_suite(1)
    assert r.passed and r.instances > 15 * 3


def test_small_suites_pass():
    for r in (ybe_suite(1), iso_suite(1), energy_suite(1), rbar_suite()):
        assert r.passed, r.failures[:3]


def test_ybe_vacuum_sanity():
    lhs, rhs = ybe_sides(2, (crystal.u(2), "1", "1"))
    assert lhs == rhs == ((0, "1"), (0, "1"), (0, crystal.u(2)))


def test_reports_are_deterministic():
    assert run_suite("energy", 1).to_json() == run_suite("energy", 1).to_json()
    json.loads(run_suite("ybe", 1).to_json())


def test_energy_one_oracle_small():
    for L in range(1, 6):
        assert energy_one_states(L) == energy_one_families(L)


def test_fault_in_letter_table_is_caught(monkeypatch, fresh_caches):
    monkeypatch.setitem(B1._f, (2, "2_1"), "3")
    r = check_axioms(B1, B1.elements(), SuiteReport("letters"))
    assert not r.passed


def test_fault_in_coordinate_operator_is_caught(monkeypatch, fresh_caches):
    good = crystal._LOWER[2]

    def bad(b):
        d = good(b)
        return tuple(-x for x in d) if b == crystal.letter_coord("2_1") else d

    monkeypatch.setitem(crystal._LOWER, 2, bad)
    assert not axiom_suite(1).passed


def test_fault_in_rbar_table_is_caught(monkeypatch, fresh_caches):
    monkeypatch.setitem(rmatrix.RBAR_HW, "e", ("e", "1'"))
    assert not rbar_suite().passed


def test_fault_in_r_table_is_caught(monkeypatch, fresh_caches):
    real = rmatrix.h_hw

    def shifted(l, w):
        return real(l, w) - (w[1] == "0")

    monkeypatch.setattr(rmatrix, "h_hw", shifted)
    assert not energy_suite(2).passed


def test_bounds_defaults():
    b = Bounds()
    assert (b.level, b.ybe_level, b.energy_one_length) == (3, 2, 8)
    assert PerfectCrystal(b.level).l == 3


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
