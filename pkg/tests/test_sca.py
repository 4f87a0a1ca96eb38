import pytest
from hypothesis import given, strategies as st

from g2sca.a1 import A1Element
from g2sca.sca import (CarrierError, PaddingError, SCAState, detect_solitons, evolve, i_l,
                       predict_multi, predict_two_body, run, scattering_report,
                       simulate_until_separation, soliton_label, state_energy, t_natural,
                       trace_json, trace_text, track_phase)


def S(text):
    return SCAState.parse(text)


def test_parse_accepts_latex_names():
    assert S(r"1 \overline{2}_3 \overline{3} \overline{1} \hat{0}").cells == ("1", "b2_3", "b3", "b1", "0h")
    with pytest.raises(ValueError):
        S("1 7")


def test_vacuum_is_stationary():
    p = S("1 " * 12)
    assert evolve(p, 3)[0] == p
    assert state_energy(p, 3) == 0


@pytest.mark.parametrize("k,l", [(1, 3), (2, 3), (2, 5)])
def test_slow_carrier_shifts_block_of_twos(k, l):
    p = SCAState(("2",) * l + ("1",) * 9)
    q, trace = evolve(p, k)
    assert q.cells == ("1",) * k + ("2",) * l + ("1",) * (9 - k)
    assert trace.carriers[0] == trace.carriers[-1]


def test_padding_is_checked():
    with pytest.raises(PaddingError, match="trailing vacuum"):
        evolve(S("3 2_2 2 2 1 1"), 10)


def test_carrier_error_names_cell():
    # padding check skipped: the carrier still holds twos at the right edge
    with pytest.raises(CarrierError, match="cell"):
        evolve(S("2 2 2 2 1"), 4, check_padding=False)


def test_energy_of_first_example_with_unit_carrier(golden):
    assert state_energy(golden("example1.txt")[0], 1) == 2


def test_detection_on_first_example(golden):
    scan = detect_solitons(golden("example1.txt")[0], 10, 0)
    assert [(r.length, r.start, tuple(r.label), r.exponent) for r in scan.records] == [
        (4, 0, (7, 5), 0), (2, 8, (5, 1), -8)]


def test_detection_rejects_merged_run(golden):
    scan = detect_solitons(golden("example3.txt")[3])
    assert not scan.ok and "not a soliton" in scan.reason
    assert detect_solitons(S("1 1 1")).records == ()


def test_labels():
    assert soliton_label(["3", "2_2", "2", "2"]) == (7, 5)
    assert soliton_label(["2_1", "2"]) == (5, 1)
    assert soliton_label(["2"] * 4) == (12, 0)
    with pytest.raises(ValueError):
        soliton_label(["2", "3"])


@given(st.integers(1, 8), st.data())
def test_i_l_round_trip(l, data):
    x = data.draw(st.integers(0, 3 * l))
    run_ = i_l((x, 3 * l - x))
    assert len(run_) == l
    assert soliton_label(run_) == (x, 3 * l - x)


def test_phase_tracking(golden):
    rows = golden("example1.txt")
    short = detect_solitons(rows[4], 10, 4).records[0]
    assert short.start == 13 and track_phase(short, 4, 10) == 5


@given(st.integers(0, 5))
def test_leading_vacuum_shifts_phase(n):
    p = S("3 2_2 2 2 1 1 1 1 2_1 2 " + "1 " * 12)
    q = SCAState(("1",) * n + p.cells)
    a = detect_solitons(p, 10, 0).records
    b = detect_solitons(q, 10, 0).records
    assert [r.phase + n for r in a] == [r.phase for r in b]


def test_two_body_prediction():
    pred = predict_two_body((0, (7, 5)), (-8, (5, 1)))
    assert pred.outgoing == ((-5, (1, 5)), (-3, (11, 1)))
    assert (pred.shift_short, pred.shift_long) == (3, 3)
    with pytest.raises(ValueError):
        predict_two_body((0, (3, 0)), (-5, (5, 1)))


def test_degenerate_pair_passes_through_with_full_shift():
    pred = predict_two_body((0, (9, 0)), (-6, (6, 0)))
    assert pred.outgoing == ((-6 + 4, (6, 0)), (0 - 4, (9, 0)))


def test_multi_prediction():
    out = predict_multi([(0, (2, 7)), (-5, (5, 1)), (-9, (1, 2))])
    assert out == [(-8, (1, 2)), (-3, (2, 4)), (-3, (5, 4))]
    assert predict_multi([(0, (3, 3))]) == [(0, (3, 3))]
    assert predict_multi([(0, (7, 5)), (-8, (5, 1))]) == list(
        predict_two_body((0, (7, 5)), (-8, (5, 1))).outgoing)
    with pytest.raises(ValueError):
        predict_multi([(0, (12, 0)), (-8, (0, 6)), (-12, (6, 0))])


def test_natural_step_moves():
    q, node = t_natural(S("1 2 2 1 1 1"))
    assert q == S("1 2 2 1 1 1") and node == "1'"
    q, node = t_natural(S("3 3 2 2 1 1 1"))
    assert q == S("1 3 2_2 2 2 1 1") and node == "2'"


@pytest.mark.parametrize("n,steps", [(1, 4), (2, 8), (3, 7)])
def test_golden_traces(golden, n, steps):
    rows = golden(f"example{n}.txt")
    assert run(rows[0], 10, steps).rows == rows


def test_example_reports(golden):
    rep = scattering_report(golden("example2.txt")[0], 10)
    assert rep.agreement and rep.separated_at == 7
    rep = scattering_report(golden("example3.txt")[0], 10)
    assert not rep.agreement and "did not separate" in rep.verdict


def test_separation_cap(golden):
    sim = simulate_until_separation(golden("example3.txt")[0], 10, max_steps=20)
    assert sim.separated_at is None and len(sim.rows) == 21


def test_trace_formats(golden):
    sim = run(golden("example1.txt")[0], 10, 1)
    assert trace_text(sim.rows).splitlines()[1].startswith("t=1: 1 1 1 1 3 2_2")
    assert trace_json(sim, 10) == trace_json(run(golden("example1.txt")[0], 10, 1), 10)
    assert '"carrier_level": 10' in trace_json(sim, 10)


def test_energy_conserved_along_golden_rows(golden):
    for r in (1, 2, 10):
        values = {state_energy(p.padded(12), r) for p in golden("example2.txt")}
        assert len(values) == 1


def test_state_requires_known_tokens():
    with pytest.raises(ValueError):
        SCAState(("1", "x"))
    assert A1Element(3, 0).level == 3


@pytest.mark.parametrize("l1,l2", [(2, 1), (3, 1), (3, 2), (4, 3), (5, 2)])
def test_long_soliton_shift_range(l1, l2):
    shifts = {predict_two_body((0, (x, 3 * l1 - x)), (-20, (y, 3 * l2 - y))).shift_long
              for x in range(3 * l1 + 1) for y in range(3 * l2 + 1)}
    assert min(shifts) == -l2 and max(shifts) == 2 * l2
