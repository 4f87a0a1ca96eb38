"""Exhaustive identity suites and brute-force oracles."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import product

from . import crystal as _crystal
from . import rmatrix as _rmatrix
from . import sca as _sca
from .a1 import A1Crystal, A1Element, a1_aff_r
from .crystal import B1, BNAT, LETTERS, PerfectCrystal, tableau_coord, u
from .rmatrix import (HW_LETTERS, aff_r, b1_bl, b1_bnat, bl_b1, bnat_b1, h_b1b1, h_hw,
                      propagate_isomorphism, r_apply, r_insertion, rbar_apply, rbar_level)
from .sca import (SCAState, detect_solitons, evolve, i_l, predict_two_body, scattering_report,
                  soliton_label, state_energy, t_natural, with_padding)
from .tensor import TensorProduct

# <h_j, alpha_i> for G2(1), indices 0, 1, 2; column i is alpha_i
CARTAN = ((2, -1, 0), (-1, 2, -1), (0, -3, 2))
MAX_FAILURES = 20


@dataclass
class SuiteReport:
    name: str
    instances: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok, input, expected, got):
        self.instances += 1
        if not ok and len(self.failures) < MAX_FAILURES:
            self.failures.append({"input": _plain(input), "expected": _plain(expected),
                                  "got": _plain(got)})
        elif not ok:
            self.failures.append(None)
        return ok

    def merge(self, other: "SuiteReport") -> "SuiteReport":
        return SuiteReport(self.name, self.instances + other.instances,
                           self.failures + other.failures)

    def as_dict(self):
        return {"suite": self.name, "instances": self.instances, "passed": self.passed,
                "failure_count": len(self.failures),
                "failures": [f for f in self.failures if f is not None]}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.instances} checks, {len(self.failures)} failures"


def _plain(x):
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (tuple, list)):
        return [_plain(v) for v in x]
    return str(x)


def clear_caches():
    """Drop memoized tables, e.g. after a test has patched an operator."""
    for mod in (_crystal, _rmatrix, _sca):
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


@dataclass(frozen=True)
class Bounds:
    level: int = 3
    ybe_level: int = 2
    energy_one_length: int = 8
    one_soliton_level: int = 4
    carrier_max: int = 5
    natural_level: int = 3
    commute_length: int = 3
    commute_level: int = 3
    natural_random: int = 300
    two_body_pairs: tuple = ((2, 1), (3, 1), (3, 2))


# ---------------------------------------------------------------------------
# crystal axioms

def check_axioms(crystal, elements, report: SuiteReport, weight=None):
    """Inverse pairs, string shifts, weight shifts and string lengths."""
    weight = weight or crystal.weight
    idx = list(crystal.index_set)
    for b in elements:
        wb = weight(b)
        for i in idx:
            eps, phi = crystal.epsilon(i, b), crystal.phi(i, b)
            report.check(eps >= 0 and phi >= 0, (b, i), "eps, phi >= 0", (eps, phi))
            for op, inv, d_eps, d_wt in (("e", "f", -1, 1), ("f", "e", 1, -1)):
                c = getattr(crystal, op)(i, b)
                if c is None:
                    continue
                back = getattr(crystal, inv)(i, c)
                report.check(back == b, (op, i, b), b, back)
                got = (crystal.epsilon(i, c), crystal.phi(i, c))
                report.check(got == (eps + d_eps, phi - d_eps), (op, i, b, "strings"),
                             (eps + d_eps, phi - d_eps), got)
                want = tuple(wb[k] + d_wt * CARTAN[j][i] for k, j in enumerate(idx))
                report.check(tuple(weight(c)) == want, (op, i, b, "weight"), want, tuple(weight(c)))
            for op, want in (("e", eps), ("f", phi)):
                n = _string_length(crystal, op, i, b, len(elements))
                report.check(n == want, (i, b, f"{op}-string length"), want, n)
    return report


def _string_length(crystal, op, i, b, bound):
    """Length of the i-string in direction op; None if it runs past bound (a cycle)."""
    n = 0
    while (b := getattr(crystal, op)(i, b)) is not None:
        n += 1
        if n > bound:
            return None
    return n


def axiom_suite(l: int) -> SuiteReport:
    c = PerfectCrystal(l)
    elements = c.elements()
    report = SuiteReport(f"axioms l={l}")
    members = set(elements)
    for b in elements:
        for i in c.index_set:
            for op in (c.e, c.f):
                v = op(i, b)
                report.check(v is None or v in members, (i, b), "member", v)
    return check_axioms(c, elements, report)


# ---------------------------------------------------------------------------
# isomorphisms

def check_isomorphism(src, dst, fn, elements, report: SuiteReport):
    images = {}
    members = None
    for w in elements:
        images[w] = fn(w)
    members = set(dst.elements())
    report.check(len(set(images.values())) == len(images) and set(images.values()) <= members,
                 "bijection", len(images), len(set(images.values()) & members))
    for w, v in images.items():
        report.check(tuple(src.weight(w)) == tuple(dst.weight(v)), (w, "weight"),
                     src.weight(w), dst.weight(v))
        for i in src.index_set:
            for op in ("e", "f"):
                w2 = getattr(src, op)(i, w)
                v2 = getattr(dst, op)(i, v)
                want = None if w2 is None else images[w2]
                report.check(v2 == want, (op, i, w), want, v2)
    return report


def iso_suite(l: int) -> SuiteReport:
    report = SuiteReport(f"iso l={l}")
    src, dst = bl_b1(l), b1_bl(l)
    elements = src.elements()
    check_isomorphism(src, dst, lambda w: r_apply(l, w)[0], elements, report)
    for w in elements:
        want = r_apply(l, w)[0]
        got = r_insertion(l, w)
        report.check(tuple(got) == tuple(want), ("insertion", w), want, got)
    # oracle: propagate u_l (x) 1 -> 1 (x) u_l along all arrows
    table = propagate_isomorphism(src, dst, (u(l), "1"), ("1", u(l)))
    report.check(len(table) == len(elements), "connected", len(elements), len(table))
    for w, v in table.items():
        report.check(r_apply(l, w)[0] == v, ("propagation", w), v, r_apply(l, w)[0])
    return report


def rbar_suite() -> SuiteReport:
    report = SuiteReport("iso B_nat (x) B_1")
    src = bnat_b1()
    check_isomorphism(src, b1_bnat(), rbar_apply, src.elements(), report)
    table = propagate_isomorphism(src, b1_bnat(), ("1'", "1"), ("1", "1'"))
    for w, v in table.items():
        report.check(rbar_apply(w) == v, ("propagation", w), v, rbar_apply(w))
    return report


# ---------------------------------------------------------------------------
# energy

def energy_suite(l: int) -> SuiteReport:
    report = SuiteReport(f"energy l={l}")
    src, dst = bl_b1(l), b1_bl(l)
    for w in src.elements():
        (img, h) = r_apply(l, w)
        for i in src.index_set:
            w2 = src.e(i, w)
            if w2 is None:
                continue
            want = h
            if i == 0:
                left_src = src.position(0, "raise", w) == 0
                left_dst = dst.position(0, "raise", img) == 0
                if left_src and left_dst:
                    want = h + 1
                elif not left_src and not left_dst:
                    want = h - 1
            got = r_apply(l, w2)[1]
            report.check(got == want, ("e", i, w), want, got)
    for j in range(l + 1):
        for a in HW_LETTERS:
            w = (tableau_coord(["1"] * j), a)
            try:
                want = h_hw(l, w)
            except ValueError:
                continue
            report.check(r_apply(l, w)[1] == want, ("hw", j, a), want, r_apply(l, w)[1])
    values = {r_apply(l, w)[1] for w in src.elements()}
    report.check(values <= {0, -1, -2}, "range", [0, -1, -2], sorted(values))
    return report


# ---------------------------------------------------------------------------
# Yang-Baxter on B_l (x) B_1 (x) B_1 with affine exponents

def _aff11(left, right):
    # R is the identity on B_1 (x) B_1; only exponents move
    (m, a), (n, b) = left, right
    h = h_b1b1((a, b))
    return (n + h, a), (m - h, b)


def _aff_l1(l, left, right):
    x, y = aff_r(l, left, right)
    return tuple(x), tuple(y)


def ybe_sides(l, w):
    b, x, y = w
    p = ((0, b), (0, x), (0, y))
    # R12 R23 R12, rightmost first
    x1, b1 = _aff_l1(l, p[0], p[1])
    y1, b2 = _aff_l1(l, b1, p[2])
    y2, x2 = _aff11(x1, y1)
    lhs = (y2, x2, b2)
    # R23 R12 R23
    y3, x3 = _aff11(p[1], p[2])
    y4, b3 = _aff_l1(l, p[0], y3)
    x4, b4 = _aff_l1(l, b3, x3)
    rhs = (y4, x4, b4)
    return lhs, rhs


def ybe_suite(l: int) -> SuiteReport:
    report = SuiteReport(f"ybe l={l}")
    for w in TensorProduct(PerfectCrystal(l), B1, B1).elements():
        lhs, rhs = ybe_sides(l, w)
        report.check(lhs == rhs, w, lhs, rhs)
    return report


# ---------------------------------------------------------------------------
# SCA properties

def energy_one_families(L: int) -> set:
    out = set()
    for lead, m, n in product(range(L + 1), repeat=3):
        r = L - lead - m - n
        if r < 0:
            continue
        out.add(("1",) * lead + ("3",) * m + ("2",) * n + ("1",) * r)
        if r >= 1:
            for mid in ("2_1", "2_2"):
                out.add(("1",) * lead + ("3",) * m + (mid,) + ("2",) * n + ("1",) * (r - 1))
    out.discard(("1",) * L)
    return out


def energy_one_states(L: int) -> set:
    """{p in B_1^L : E_1(p) = 1} by a depth-first sweep; terms -H are >= 0 so
    partial sums above 1 are pruned without loss.

    The energy is that of p followed by vacuum, so the carrier's exit term counts.
    """
    found = set()

    def grow(prefix, carrier, total):
        if len(prefix) == L:
            if total - r_apply(1, (carrier, "1"))[1] == 1:
                found.add(prefix)
            return
        for b in B1.elements():
            (_, new_carrier), h = r_apply(1, (carrier, b))
            if total - h <= 1:
                grow(prefix + (b,), new_carrier, total - h)

    grow((), u(1), 0)
    return found


def energy_one_check(L: int, report: SuiteReport):
    got = energy_one_states(L)
    want = energy_one_families(L)
    report.check(got == want, ("energy one", L), sorted(want - got), sorted(got - want))
    # sweep energies by the full evolution on padded copies
    for p in sorted(got)[:200]:
        e = state_energy(with_padding(SCAState(p), 1), 1)
        report.check(e == 1, ("energy one sweep", p), 1, e)


def one_soliton_check(lmax: int, kmax: int, report: SuiteReport):
    for l in range(1, lmax + 1):
        for x in range(3 * l + 1):
            run = i_l((x, 3 * l - x))
            p = SCAState(("1",) * 2 + run + ("1",) * (kmax + l + 2))
            for k in range(1, kmax + 1):
                q, _ = evolve(p, k)
                scan = detect_solitons(q)
                moved = [(rec.start, rec.label) for rec in scan.records]
                want = [(2 + min(k, l), A1Element(x, 3 * l - x))]
                report.check(moved == want, ("one soliton shift", run, k), want, moved)
                e = state_energy(p, k)
                report.check(e == min(k, l), ("one soliton energy", run, k), min(k, l), e)


def i_l_check(lmax: int, report: SuiteReport):
    for l in range(1, lmax + 1):
        a1 = A1Crystal(3 * l)
        tp = TensorProduct(*([B1] * l))
        for b in a1.elements():
            report.check(soliton_label(i_l(b)) == b, ("round trip", b), b, soliton_label(i_l(b)))
            for op in ("e", "f"):
                nb = getattr(a1, op)(1, b)
                want = None if nb is None else i_l(nb)
                got = getattr(tp, op)(2, i_l(b))
                report.check(got == want, ("i_l", op, b), want, got)


def natural_step_check(lmax: int, report: SuiteReport):
    for l in range(1, lmax + 1):
        for x in range(3 * l + 1):
            lead = 3
            p = SCAState(("1",) * lead + i_l((x, 3 * l - x)) + ("1",) * (l + 2))
            q, node = t_natural(p)
            recs = detect_solitons(q).records
            if x == 3 * l:
                want = [(lead, (x, 0))], "1'"
            else:
                want = [(lead + 1, (x + 1, 3 * l - x - 1))], "2'"
            got = [(rec.start, tuple(rec.label)) for rec in recs], node
            report.check(got == want, ("natural step", l, x), want, got)


def commute_check(L: int, lmax: int, report: SuiteReport):
    """f_2, e_2 commute with T_l and preserve E_l on states 1 (x) q (x) padding."""
    tp_cache = {}
    for l in range(1, lmax + 1):
        pad = l + L + 1
        for body in product(LETTERS, repeat=L):
            p = SCAState(body + ("1",) * pad)
            n = len(p)
            tp = tp_cache.setdefault(n, TensorProduct(*([B1] * n)))
            tq, _ = evolve(p, l)
            for op in ("e", "f"):
                p2 = getattr(tp, op)(2, p.cells)
                t2 = getattr(tp, op)(2, tq.cells)
                if p2 is None:
                    report.check(t2 is None, (op, l, body), None, t2)
                    continue
                q2, _ = evolve(SCAState(p2), l)
                report.check(t2 == q2.cells, (op, l, body), q2.cells, t2)
                e1, e2 = state_energy(p, l), state_energy(SCAState(p2), l)
                report.check(e1 == e2, (op, l, body, "energy"), e1, e2)


def natural_commute_check(report: SuiteReport, count: int, lmax: int = 3, L: int = 6, seed: int = 0):
    rng = random.Random(seed)
    states = [tuple(b) for b in product(["1", "2", "3", "2_1", "0", "b1"], repeat=3)]
    for _ in range(count):
        states.append(tuple(rng.choice(B1.elements()) for _ in range(L)))
    for body in states:
        for l in range(1, lmax + 1):
            p = SCAState(body + ("1",) * (len(body) + l + 2))
            tl, _ = evolve(p, l)
            a, bp = t_natural(p)
            lhs, _ = evolve(a, l)
            rhs, _ = t_natural(tl)
            report.check(lhs == rhs, ("natural commute", l, body), rhs.cells, lhs.cells)
            want = rbar_level(l, (u(l), bp))
            got = (t_natural(tl)[1], u(l))
            report.check(got == tuple(want), ("natural carrier", l, body), want, got)


def two_soliton_state(b1, b2, gap: int) -> SCAState:
    return SCAState(i_l(b1) + ("1",) * gap + i_l(b2))


def two_body_check(pairs, rmax: int, report: SuiteReport, gap=None):
    for l1, l2 in pairs:
        for r in range(l2 + 1, rmax + 1):
            g = r if gap is None else gap
            for x in range(3 * l1 + 1):
                for y in range(3 * l2 + 1):
                    b1, b2 = A1Element(x, 3 * l1 - x), A1Element(y, 3 * l2 - y)
                    rep = scattering_report(two_soliton_state(b1, b2, g), r)
                    want = list(predict_two_body((0, b1), (-(l1 + g), b2)).outgoing)
                    report.check(rep.agreement and rep.simulated == want,
                                 ("two body", r, b1, b2), want, rep.simulated)


def multi_check(report: SuiteReport):
    """A1 side: the two reduced words of the 3-body scattering agree."""
    for l1, l2, l3 in ((3, 2, 1), (4, 2, 1)):
        for x, y, z in product(range(3 * l1 + 1), range(3 * l2 + 1), range(3 * l3 + 1)):
            p = [(0, A1Element(x, 3 * l1 - x)), (-10, A1Element(y, 3 * l2 - y)),
                 (-20, A1Element(z, 3 * l3 - z))]

            def r(q, i):
                q = list(q)
                (a, b) = q[i], q[i + 1]
                la, lb = sum(a[1]) // 3, sum(b[1]) // 3
                q[i], q[i + 1] = a1_aff_r(a, b, shift=2 * min(la, lb))
                return q

            lhs = r(r(r(p, 0), 1), 0)
            rhs = r(r(r(p, 1), 0), 1)
            report.check(lhs == rhs, ("a1 ybe", p), lhs, rhs)


def sca_suite(bounds: Bounds = Bounds()) -> SuiteReport:
    report = SuiteReport("sca")
    for L in range(1, bounds.energy_one_length + 1):
        energy_one_check(L, report)
    one_soliton_check(bounds.one_soliton_level, bounds.carrier_max, report)
    i_l_check(bounds.one_soliton_level, report)
    natural_step_check(bounds.natural_level, report)
    commute_check(bounds.commute_length, bounds.commute_level, report)
    natural_commute_check(report, bounds.natural_random)
    two_body_check(bounds.two_body_pairs, bounds.carrier_max, report)
    multi_check(report)
    return report


SUITES = ("axioms", "ybe", "iso", "energy", "sca")


def run_suite(name: str, level: int | None = None, bounds: Bounds = Bounds()) -> SuiteReport:
    if name == "axioms":
        levels = [level] if level else range(1, bounds.level + 1)
        return _merge(f"axioms l<={max(levels)}", [axiom_suite(l) for l in levels])
    if name == "ybe":
        levels = [level] if level else range(1, bounds.ybe_level + 1)
        return _merge(f"ybe l<={max(levels)}", [ybe_suite(l) for l in levels])
    if name == "iso":
        levels = [level] if level else range(1, bounds.level + 1)
        return _merge(f"iso l<={max(levels)}", [iso_suite(l) for l in levels] + [rbar_suite()])
    if name == "energy":
        levels = [level] if level else range(1, bounds.level + 1)
        return _merge(f"energy l<={max(levels)}", [energy_suite(l) for l in levels])
    if name == "sca":
        return sca_suite(bounds)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")


def _merge(name, reports):
    out = SuiteReport(name)
    for r in reports:
        out = out.merge(r)
    out.name = name
    return out


def natural_axioms() -> SuiteReport:
    return check_axioms(BNAT, BNAT.elements(), SuiteReport("axioms B_nat"))
