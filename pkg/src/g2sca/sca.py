"""The G2(1) soliton cellular automaton.

States are tuples of letter tokens.  A carrier u_l enters from the left and
each cell is updated by (cell', carrier') = R(carrier (x) cell).
"""

from __future__ import annotations

import json
import re
from dataclasses import asdict, dataclass

from .a1 import A1Element, a1_aff_r
from .crystal import ALL_LETTERS, LETTER_LATEX, Coord, u
from .rmatrix import rbar_apply, r_apply

VACUUM = "1"
# letter of B_1 for each triple of the one-row A1 tableau
TRIPLE_LETTER = {"111": "2", "112": "2_1", "122": "2_2", "222": "3"}
LETTER_TRIPLE = {v: k for k, v in TRIPLE_LETTER.items()}
_RUN = re.compile(r"^(3*)(2_1|2_2)?(2*)$")


class PaddingError(ValueError):
    pass


class CarrierError(RuntimeError):
    pass


@dataclass(frozen=True)
class SCAState:
    cells: tuple[str, ...]

    def __post_init__(self):
        bad = [c for c in self.cells if c not in ALL_LETTERS]
        if bad:
            raise ValueError(f"unknown letter tokens {bad}")

    @classmethod
    def parse(cls, text: str) -> "SCAState":
        return cls(tuple(parse_tokens(text)))

    def __len__(self):
        return len(self.cells)

    def __str__(self):
        return " ".join(self.cells)

    def padding(self) -> int:
        n = 0
        for c in reversed(self.cells):
            if c != VACUUM:
                break
            n += 1
        return n

    def padded(self, n: int) -> "SCAState":
        return SCAState(self.cells + (VACUUM,) * n)

    def longest_run(self) -> int:
        best = cur = 0
        for c in self.cells:
            cur = cur + 1 if c != VACUUM else 0
            best = max(best, cur)
        return best


_LATEX_TOKEN = {v.replace(" ", ""): k for k, v in LETTER_LATEX.items()}


def parse_tokens(text: str) -> list[str]:
    """Whitespace-separated tokens; LaTeX letter names are accepted too."""
    out = []
    for tok in text.split():
        if tok in ALL_LETTERS:
            out.append(tok)
        elif tok in _LATEX_TOKEN:
            out.append(_LATEX_TOKEN[tok])
        else:
            raise ValueError(f"unknown letter token {tok!r}")
    return out


@dataclass(frozen=True)
class CarrierTrace:
    carriers: tuple[Coord, ...]
    energies: tuple[int, ...]


def required_padding(p: SCAState, l: int) -> int:
    return max(l, p.longest_run()) + 1


def evolve(p: SCAState, l: int, check_padding: bool = True):
    """One step of T_l; returns (T_l(p), carrier trace)."""
    if check_padding and p.padding() < required_padding(p, l):
        raise PaddingError(
            f"need {required_padding(p, l)} trailing vacuum cells for carrier level {l}, "
            f"state has {p.padding()}")
    carrier = u(l)
    carriers = [carrier]
    energies = []
    out = []
    for cell in p.cells:
        (new_cell, carrier), h = r_apply(l, (carrier, cell))
        out.append(new_cell)
        carriers.append(carrier)
        energies.append(h)
    if carrier != u(l):
        last = max(k for k, c in enumerate(carriers) if c == u(l))
        raise CarrierError(
            f"carrier ended at {carrier}, not u_{l}; it left u_{l} for good at cell {last}")
    return SCAState(tuple(out)), CarrierTrace(tuple(carriers), tuple(energies))


def state_energy(p: SCAState, l: int) -> int:
    return -sum(evolve(p, l)[1].energies)


def t_natural(p: SCAState):
    """T-natural; returns (state, final B-natural carrier b(p))."""
    carrier = "1'"
    out = []
    for cell in p.cells:
        new_cell, carrier = rbar_apply((carrier, cell))
        out.append(new_cell)
    return SCAState(tuple(out)), carrier


# ---------------------------------------------------------------------------
# solitons

@dataclass(frozen=True)
class SolitonRecord:
    length: int
    start: int
    label: A1Element
    phase: int | None = None

    @property
    def exponent(self):
        return None if self.phase is None else -self.phase

    def as_dict(self):
        return {"length": self.length, "start": self.start, "label": list(self.label),
                "phase": self.phase, "exponent": self.exponent}


@dataclass(frozen=True)
class SolitonScan:
    records: tuple[SolitonRecord, ...]
    reason: str | None = None

    @property
    def ok(self) -> bool:
        return self.reason is None


def is_soliton_run(run) -> bool:
    return bool(_RUN.match("".join(_token_char(c) for c in run))) and len(run) > 0


def _token_char(c):
    return {"3": "3", "2": "2", "2_1": "2_1", "2_2": "2_2"}.get(c, "?")


def soliton_label(run) -> A1Element:
    """Inverse of i_l: the A1 element of a soliton run."""
    run = tuple(run)
    if not is_soliton_run(run):
        raise ValueError(f"{' '.join(run)} is not a soliton configuration")
    word = "".join(LETTER_TRIPLE[c] for c in reversed(run))
    return A1Element(word.count("1"), word.count("2"))


def i_l(a) -> tuple[str, ...]:
    """A1 element of level 3l to its soliton run b_l ... b_1."""
    x1, x2 = a
    if (x1 + x2) % 3:
        raise ValueError(f"{tuple(a)} does not have level divisible by 3")
    word = "1" * x1 + "2" * x2
    triples = [word[k:k + 3] for k in range(0, len(word), 3)]
    return tuple(TRIPLE_LETTER[t] for t in reversed(triples))


def detect_solitons(p: SCAState, r: int | None = None, t: int = 0) -> SolitonScan:
    """Split p into maximal non-vacuum runs and label them.

    With a carrier level r the records carry phases k = start - min(r, length) * t.
    """
    records = []
    k = 0
    cells = p.cells
    while k < len(cells):
        if cells[k] == VACUUM:
            k += 1
            continue
        start = k
        while k < len(cells) and cells[k] != VACUUM:
            k += 1
        run = cells[start:k]
        if not is_soliton_run(run):
            return SolitonScan(tuple(records), f"run {' '.join(run)} at cell {start} is not a soliton")
        phase = None if r is None else start - min(r, len(run)) * t
        records.append(SolitonRecord(len(run), start, soliton_label(run), phase))
    return SolitonScan(tuple(records))


def track_phase(record: SolitonRecord, t: int, r: int) -> int:
    return record.start - min(r, record.length) * t


def affine_labels(records):
    """(exponent, label) pairs, i.e. z^{-k} label."""
    return [(-rec.phase, rec.label) for rec in records]


# ---------------------------------------------------------------------------
# scattering prediction

@dataclass(frozen=True)
class TwoBodyPrediction:
    outgoing: tuple
    shift_short: int
    shift_long: int


def predict_two_body(left, right) -> TwoBodyPrediction:
    """z^{e1} b1 (x) z^{e2} b2 with len(b1) > len(b2) scattered by R-hat^Aff, shift 2*l2."""
    (e1, b1), (e2, b2) = left, right
    l1, l2 = sum(b1) // 3, sum(b2) // 3
    if l1 <= l2:
        raise ValueError(f"two-body rule needs l1 > l2, got {l1}, {l2}")
    out = a1_aff_r((e1, A1Element(*b1)), (e2, A1Element(*b2)), shift=2 * l2)
    return TwoBodyPrediction(out, out[0][0] - e2, e1 - out[1][0])


def scattering_word(m: int) -> list[int]:
    """Positions (0-based left index) of the R-hat factors, in application order."""
    return [i for rnd in range(m - 1) for i in range(m - 1 - rnd)]


def predict_multi(pairs):
    pairs = [(e, A1Element(*b)) for e, b in pairs]
    lengths = [sum(b) // 3 for _, b in pairs]
    if any(a <= b for a, b in zip(lengths, lengths[1:])):
        raise ValueError(f"lengths must be strictly decreasing, got {lengths}")
    for i in scattering_word(len(pairs)):
        pairs[i], pairs[i + 1] = predict_two_body(pairs[i], pairs[i + 1]).outgoing
    return pairs


def separated(scan: SolitonScan, r: int) -> bool:
    """All runs are solitons and no faster soliton sits to the left of a slower one."""
    if not scan.ok:
        return False
    speeds = [min(r, rec.length) for rec in scan.records]
    return all(a <= b for a, b in zip(speeds, speeds[1:]))


@dataclass
class Simulation:
    rows: list
    energies: list
    scans: list
    separated_at: int | None = None

    @property
    def final(self):
        return self.rows[-1]


def run(p: SCAState, r: int, steps: int, pad: bool = False) -> Simulation:
    """Apply T_r `steps` times; with pad=True the lattice grows to keep the vacuum tail."""
    rows = [p]
    for _ in range(steps):
        if pad:
            p = with_padding(p, r)
        p, _ = evolve(p, r)
        rows.append(p)
    return _finish(rows, r)


def with_padding(p, r):
    return p.padded(max(0, required_padding(p, r) - p.padding()))


def _finish(rows, r, separated_at=None):
    # rows share one width; energies are taken on padded copies, trailing 1s add nothing
    width = max(len(x) for x in rows)
    rows = [x.padded(width - len(x)) for x in rows]
    energies = [state_energy(with_padding(x, r), r) for x in rows]
    scans = [detect_solitons(x, r, t) for t, x in enumerate(rows)]
    return Simulation(rows, energies, scans, separated_at)


def simulate_until_separation(p: SCAState, r: int, max_steps: int = 64) -> Simulation:
    """Evolve until separated() holds at t and t+1 with identical labels and phases.

    The lattice is extended on the right as needed.
    """
    rows = [with_padding(p, r)]
    scans = [detect_solitons(rows[0], r, 0)]
    for t in range(max_steps):
        nxt, _ = evolve(with_padding(rows[t], r), r)
        scan = detect_solitons(nxt, r, t + 1)
        rows.append(nxt)
        scans.append(scan)
        if (separated(scans[t], r) and separated(scan, r)
                and [(x.label, x.phase) for x in scans[t].records]
                == [(x.label, x.phase) for x in scan.records]):
            return _finish(rows[:t + 1], r, separated_at=t)
    return _finish(rows, r)


@dataclass
class ScatteringReport:
    carrier: int
    incoming: list
    predicted: list | None
    simulated: list | None
    phase_shifts: list | None
    separated_at: int | None
    agreement: bool
    verdict: str

    def as_dict(self):
        def pairs(xs):
            return None if xs is None else [[e, list(b)] for e, b in xs]

        d = asdict(self)
        d["incoming"] = pairs(self.incoming)
        d["predicted"] = pairs(self.predicted)
        d["simulated"] = pairs(self.simulated)
        return d

    def text(self) -> str:
        def fmt(xs):
            return " (x) ".join(f"z^{e}({b[0]},{b[1]})" for e, b in xs) if xs else "-"

        lines = [f"carrier level: {self.carrier}", f"incoming:  {fmt(self.incoming)}"]
        if self.predicted is not None:
            lines.append(f"predicted: {fmt(self.predicted)}")
        if self.simulated is not None:
            lines.append(f"simulated: {fmt(self.simulated)} (separated at t={self.separated_at})")
        if self.phase_shifts is not None:
            lines.append("phase shifts: " + " ".join(f"{s:+d}" for s in self.phase_shifts))
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def scattering_report(p: SCAState, r: int, max_steps: int = 64) -> ScatteringReport:
    scan = detect_solitons(p, r, 0)
    if not scan.ok:
        return ScatteringReport(r, [], None, None, None, None, False,
                                f"initial state is not a soliton state: {scan.reason}")
    incoming = affine_labels(scan.records)
    lengths = [rec.length for rec in scan.records]
    predicted = None
    note = ""
    if all(a > b for a, b in zip(lengths, lengths[1:])):
        predicted = predict_multi(incoming)
    else:
        note = f"; lengths {lengths} are not strictly decreasing, no prediction"
    sim = simulate_until_separation(p, r, max_steps)
    if sim.separated_at is None:
        return ScatteringReport(r, incoming, predicted, None, None, None, False,
                                f"did not separate within {max_steps} steps" + note)
    simulated = affine_labels(sim.scans[-1].records)
    shifts = None
    if predicted is not None and len(predicted) == len(incoming):
        # outgoing order is reversed: match solitons by length
        by_len = {sum(b) // 3: e for e, b in predicted}
        shifts = [by_len[sum(b) // 3] - e for e, b in incoming]
    agree = predicted is not None and [(e, tuple(b)) for e, b in predicted] == \
        [(e, tuple(b)) for e, b in simulated]
    verdict = "agreement" if agree else "mismatch" + note
    return ScatteringReport(r, incoming, predicted, simulated, shifts, sim.separated_at,
                            agree, verdict)


# ---------------------------------------------------------------------------
# trace rendering

def trace_text(rows) -> str:
    return "\n".join(f"t={t}: {row}" for t, row in enumerate(rows)) + "\n"


def trace_document(sim: Simulation, r: int) -> dict:
    return {
        "carrier_level": r,
        "steps": len(sim.rows) - 1,
        "rows": [list(x.cells) for x in sim.rows],
        "energy": sim.energies,
        "solitons": [
            {"ok": s.ok, "reason": s.reason, "records": [x.as_dict() for x in s.records]}
            for s in sim.scans
        ],
    }


def trace_json(sim: Simulation, r: int) -> str:
    return json.dumps(trace_document(sim, r), indent=2, sort_keys=True) + "\n"

