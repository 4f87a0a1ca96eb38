"""Coordinate realization of the G2(1) perfect crystals B_l, the letter and
tableau views of B_1, and the seven-element crystal B-natural.

Coordinates live in (1/3)Z and the statistics introduce halves, so every
coordinate is stored as an integer number of sixths.  ``Coord(6, 0, 0, 0, 0, 0)``
is the element (1, 0, 0, 0, 0, 0).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator, NamedTuple

UNIT = 6

RAISE = "raise"
LOWER = "lower"


class Coord(NamedTuple):
    """(x1, x2, x3, xb3, xb2, xb1) in sixth-units."""

    x1: int
    x2: int
    x3: int
    xb3: int
    xb2: int
    xb1: int

    def __str__(self) -> str:
        return "(" + ",".join(_fmt(v) for v in self) + ")"


class ZVector(NamedTuple):
    """z1, z2, z3 as integers; z4 in third-units (the value is z4_thirds / 3)."""

    z1: int
    z2: int
    z3: int
    z4_thirds: int

    @property
    def z4(self) -> Fraction:
        return Fraction(self.z4_thirds, 3)


class WeightVector(NamedTuple):
    h0: int
    h1: int
    h2: int


def _fmt(v: int) -> str:
    q = Fraction(v, UNIT)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def coord(*values) -> Coord:
    """Build a ``Coord`` from six rationals (ints, Fractions or strings like '1/3')."""
    if len(values) == 1 and not isinstance(values[0], (int, str, Fraction)):
        values = tuple(values[0])
    if len(values) != 6:
        raise ValueError(f"expected 6 coordinates, got {len(values)}")
    out = []
    for v in values:
        q = Fraction(v) * UNIT
        if q.denominator != 1:
            raise ValueError(f"coordinate {v} is not a multiple of 1/6")
        out.append(int(q))
    return Coord(*out)


def as_fractions(b: Coord) -> tuple[Fraction, ...]:
    return tuple(Fraction(v, UNIT) for v in b)


def u(l: int) -> Coord:
    """The element u_l = (l, 0, 0, 0, 0, 0)."""
    return Coord(UNIT * l, 0, 0, 0, 0, 0)


EMPTY = Coord(0, 0, 0, 0, 0, 0)


def _size(b) -> int:
    # 6 * (x1 + x2 + xb2 + xb1 + (x3 + xb3)/2); the membership sum
    return b[0] + b[1] + b[4] + b[5] + (b[2] + b[3]) // 2


def membership_failure(b, l: int) -> str | None:
    """Name of the first violated membership condition, or None if b is in B_l."""
    if len(b) != 6:
        return "six coordinates required"
    if any(v < 0 for v in b):
        return "coordinates must be non-negative"
    if any(v % 2 for v in b):
        return "coordinates must lie in (1/3)Z"
    x1, x2, x3, xb3, xb2, xb1 = b
    if x1 % UNIT or xb1 % UNIT:
        return "x1 and xb1 must be integers"
    if (x2 - x3) % UNIT or (xb3 - xb2) % UNIT:
        return "x2-x3 and xb3-xb2 must be integers"
    if (x3 - xb3) % 4:
        return "3*x3 and 3*xb3 must have the same parity"
    if _size(b) > UNIT * l:
        return f"x1+x2+xb2+xb1+(x3+xb3)/2 exceeds level {l}"
    return None


def membership(b, l: int) -> bool:
    return membership_failure(b, l) is None


def s_value(b: Coord) -> Fraction:
    return Fraction(_size(b), UNIT)


def t_value(b: Coord) -> Fraction:
    """t(b) = x2 + (x3 + xb3)/2.  Not used by any operator."""
    return Fraction(2 * b.x2 + b.x3 + b.xb3, 2 * UNIT)


def _z(b):
    x1, x2, x3, xb3, xb2, xb1 = b
    return xb1 - x1, xb2 - xb3, x3 - x2, (xb3 - x3) // 2


def z_values(b: Coord) -> ZVector:
    z1, z2, z3, z4 = _z(b)
    return ZVector(z1 // UNIT, z2 // UNIT, z3 // UNIT, z4 // 2)


# Conditions (F1)..(F6) on sixth-unit z's; (Ek) is (Fk) with strictness flipped.
# (Fk) holds iff the k-th entry of A is the first place max(A) is attained and
# (Ek) iff it is the last, so each family partitions B_l.
def _f_conditions(z1, z2, z3, z4, strict_le: bool):
    if strict_le:
        le = lambda a: a < 0  # noqa: E731
        gt = lambda a: a >= 0  # noqa: E731
    else:
        le = lambda a: a <= 0  # noqa: E731
        gt = lambda a: a > 0  # noqa: E731
    w = 3 * z4
    return (
        le(z1 + z2 + z3 + w) and le(z1 + z2 + w) and le(z1 + z2) and le(z1),
        le(z1 + z2 + z3 + w) and le(z2 + w) and le(z2) and gt(z1),
        le(z1 + z3 + w) and le(z3 + w) and le(z4) and gt(z2) and gt(z1 + z2),
        gt(z1 + z2 + w) and gt(z2 + w) and gt(z4) and le(z3) and le(z1 + z3),
        gt(z1 + z2 + z3 + w) and gt(z3 + w) and gt(z3) and le(z1),
        gt(z1 + z2 + z3 + w) and gt(z1 + z3 + w) and gt(z1 + z3) and gt(z1),
    )


def f0_conditions(b: Coord) -> tuple[bool, ...]:
    """Truth values of (F1)..(F6) at b."""
    return _f_conditions(*_z(b), strict_le=False)


def e0_conditions(b: Coord) -> tuple[bool, ...]:
    """Truth values of (E1)..(E6) at b."""
    return _f_conditions(*_z(b), strict_le=True)


def _shift(b, delta):
    return Coord(*(a + d for a, d in zip(b, delta)))


def _f0_delta(b):
    z1, z2, z3, z4 = _z(b)
    case = f0_conditions(b).index(True) + 1
    if case == 1:
        return (6, 0, 0, 0, 0, 0)
    if case == 2:
        return (0, 0, 6, 6, 0, -6)
    if case == 3:
        return (0, 0, 12, 0, -6, 0)
    if case == 4:
        if z4 == 2:
            return (0, 2, 8, -4, -4, 0)
        if z4 == 4:
            return (0, 4, 4, -8, -2, 0)
        return (0, 6, 0, -12, 0, 0)
    if case == 5:
        return (6, 0, -6, -6, 0, 0)
    return (0, 0, 0, 0, 0, -6)


def _e0_delta(b):
    z1, z2, z3, z4 = _z(b)
    case = e0_conditions(b).index(True) + 1
    if case == 1:
        return (-6, 0, 0, 0, 0, 0)
    if case == 2:
        return (0, 0, -6, -6, 0, 6)
    if case == 3:
        if z4 == -2:
            return (0, -4, -4, 8, 2, 0)
        if z4 == -4:
            return (0, -2, -8, 4, 4, 0)
        return (0, 0, -12, 0, 6, 0)
    if case == 4:
        return (0, -6, 0, 12, 0, 0)
    if case == 5:
        return (-6, 0, 6, 6, 0, 0)
    return (0, 0, 0, 0, 0, 6)


def _f1_delta(b):
    _, z2, z3, _ = _z(b)
    if max(z2, 0) <= -z3:
        return (-6, 6, 0, 0, 0, 0)
    if z2 <= 0 < z3:
        return (0, 0, -6, 6, 0, 0)
    return (0, 0, 0, 0, -6, 6)


def _e1_delta(b):
    _, z2, z3, _ = _z(b)
    if z2 >= max(-z3, 0):
        return (0, 0, 0, 0, 6, -6)
    if z2 < 0 <= z3:
        return (0, 0, 6, -6, 0, 0)
    return (6, -6, 0, 0, 0, 0)


def _f2_delta(b):
    if _z(b)[3] <= 0:
        return (0, -2, 4, 0, 0, 0)
    return (0, 0, 0, -4, 2, 0)


def _e2_delta(b):
    if _z(b)[3] >= 0:
        return (0, 0, 0, 4, -2, 0)
    return (0, 2, -4, 0, 0, 0)


_LOWER = {0: _f0_delta, 1: _f1_delta, 2: _f2_delta}
_RAISE = {0: _e0_delta, 1: _e1_delta, 2: _e2_delta}


class Crystal:
    """Minimal crystal interface: Kashiwara operators plus string statistics."""

    index_set: tuple[int, ...] = (0, 1, 2)
    name = "crystal"

    def e(self, i: int, b):
        raise NotImplementedError

    def f(self, i: int, b):
        raise NotImplementedError

    def epsilon(self, i: int, b) -> int:
        raise NotImplementedError

    def phi(self, i: int, b) -> int:
        raise NotImplementedError

    def elements(self) -> list:
        raise NotImplementedError

    def apply(self, i: int, direction: str, b):
        if direction == RAISE:
            return self.e(i, b)
        if direction == LOWER:
            return self.f(i, b)
        raise ValueError(f"unknown direction {direction!r}")

    def string_data(self, i: int, b) -> tuple[int, int]:
        return self.epsilon(i, b), self.phi(i, b)

    def weight(self, b) -> tuple[int, ...]:
        """Pairings <h_i, wt(b)> = phi_i(b) - eps_i(b) over the index set."""
        return tuple(self.phi(i, b) - self.epsilon(i, b) for i in self.index_set)

    def contains(self, b) -> bool:
        return b in set(self.elements())


class PerfectCrystal(Crystal):
    """B_l in coordinates."""

    def __init__(self, l: int):
        if l < 1:
            raise ValueError(f"level must be positive, got {l}")
        self.l = l
        self.name = f"B_{l}"

    def __repr__(self):
        return f"PerfectCrystal({self.l})"

    def __eq__(self, other):
        return isinstance(other, PerfectCrystal) and other.l == self.l

    def __hash__(self):
        return hash(("B", self.l))

    def _move(self, b, delta):
        c = _shift(b, delta)
        if min(c) < 0 or _size(c) > UNIT * self.l:
            return None
        return c

    def e(self, i, b):
        return self._move(b, _RAISE[i](b))

    def f(self, i, b):
        return self._move(b, _LOWER[i](b))

    def phi(self, i, b):
        x1, x2, x3, xb3, xb2, xb1 = b
        z1, z2, z3, z4 = _z(b)
        if i == 1:
            v = x1 + max(z3 + max(z2, 0), 0)
        elif i == 2:
            v = 3 * x2 + 3 * max(z4, 0)
        else:
            v = UNIT * self.l - _size(b) + _max_a(z1, z2, z3, z4)
        return _whole(v)

    def epsilon(self, i, b):
        x1, x2, x3, xb3, xb2, xb1 = b
        z1, z2, z3, z4 = _z(b)
        if i == 1:
            v = xb1 + max(-z2 + max(-z3, 0), 0)
        elif i == 2:
            v = 3 * xb2 + 3 * max(-z4, 0)
        else:
            v = (UNIT * self.l - _size(b) + _max_a(z1, z2, z3, z4)
                 - (2 * z1 + z2 + z3 + 3 * z4))
        return _whole(v)

    def weight(self, b) -> WeightVector:
        return WeightVector(*(self.phi(i, b) - self.epsilon(i, b) for i in (0, 1, 2)))

    def elements(self) -> list[Coord]:
        return enumerate_level(self.l)

    def contains(self, b) -> bool:
        return membership(b, self.l)

    def highest(self) -> Coord:
        return u(self.l)


def _max_a(z1, z2, z3, z4):
    w = 3 * z4
    return max(0, z1, z1 + z2, z1 + z2 + w, z1 + z2 + z3 + w, 2 * z1 + z2 + z3 + w)


def _whole(v: int) -> int:
    q, r = divmod(v, UNIT)
    if r:
        raise ArithmeticError(f"non-integral string statistic {Fraction(v, UNIT)}")
    return q


@lru_cache(maxsize=None)
def _enumerate(l: int) -> tuple[Coord, ...]:
    out = []
    cap = UNIT * l
    for x1, xb1 in product(range(0, cap + 1, UNIT), repeat=2):
        rest = cap - x1 - xb1
        if rest < 0:
            continue
        for x2 in range(0, rest + 1, 2):
            for xb2 in range(0, rest - x2 + 1, 2):
                room = 2 * (rest - x2 - xb2)
                for x3 in range(x2 % UNIT, room + 1, UNIT):
                    for xb3 in range(xb2 % UNIT, room - x3 + 1, UNIT):
                        b = Coord(x1, x2, x3, xb3, xb2, xb1)
                        if membership(b, l):
                            out.append(b)
    out.sort()
    return tuple(out)


def enumerate_level(l: int) -> list[Coord]:
    """All elements of B_l, sorted lexicographically on the sixth-unit tuple."""
    if l < 1:
        raise ValueError(f"level must be positive, got {l}")
    return list(_enumerate(l))


# ---------------------------------------------------------------------------
# letters of B_1

LETTERS = ("1", "2", "2_1", "2_2", "2_3", "3", "0", "0h",
           "b3", "b2_3", "b2_2", "b2_1", "b2", "b1")
EMPTY_LETTER = "e"
ALL_LETTERS = LETTERS + (EMPTY_LETTER,)

LETTER_LATEX = {
    "1": "1", "2": "2", "2_1": "2_1", "2_2": "2_2", "2_3": "2_3", "3": "3",
    "0": "0", "0h": r"\hat{0}", "b3": r"\overline{3}", "b2_3": r"\overline{2}_3",
    "b2_2": r"\overline{2}_2", "b2_1": r"\overline{2}_1", "b2": r"\overline{2}",
    "b1": r"\overline{1}", "e": r"\varnothing",
}
LETTER_UNICODE = {
    "1": "1", "2": "2", "2_1": "2₁", "2_2": "2₂", "2_3": "2₃", "3": "3", "0": "0",
    "0h": "0̂", "b3": "3̄", "b2_3": "2̄₃", "b2_2": "2̄₂", "b2_1": "2̄₁", "b2": "2̄",
    "b1": "1̄", "e": "∅",
}


def tableau_coord(word) -> Coord:
    """Coordinates of the one-row tableau with the given entries (any order)."""
    t = {a: 0 for a in LETTERS}
    for a in word:
        if a == EMPTY_LETTER:
            continue
        t[a] += 1
    thirds = (
        3 * t["1"],
        3 * t["2"] + 2 * t["2_1"] + t["2_2"] + t["2_3"] + t["0h"],
        2 * t["2_1"] + 4 * t["2_2"] + t["2_3"] + 6 * t["3"] + t["0h"] + 3 * t["0"]
        + 3 * t["b2_3"],
        3 * t["2_3"] + t["0h"] + 3 * t["0"] + 6 * t["b3"] + t["b2_3"] + 4 * t["b2_2"]
        + 2 * t["b2_1"],
        t["0h"] + t["b2_3"] + t["b2_2"] + 2 * t["b2_1"] + 3 * t["b2"],
        3 * t["b1"],
    )
    return Coord(*(2 * v for v in thirds))


LETTER_COORDS = {a: tableau_coord([a]) for a in ALL_LETTERS}
_COORD_LETTERS = {c: a for a, c in LETTER_COORDS.items()}


def letter_coord(a: str) -> Coord:
    try:
        return LETTER_COORDS[a]
    except KeyError:
        raise ValueError(f"unknown letter {a!r}") from None


def coord_letter(b) -> str:
    try:
        return _COORD_LETTERS[tuple(b)]
    except KeyError:
        raise ValueError(f"{b} is not a level-1 element") from None


class LetterCrystal(Crystal):
    """B_1 on the 15 letter symbols, transported from PerfectCrystal(1)."""

    name = "B_1"

    def __init__(self):
        b1 = PerfectCrystal(1)
        self._e = {}
        self._f = {}
        self._eps = {}
        self._phi = {}
        for a in ALL_LETTERS:
            c = LETTER_COORDS[a]
            for i in (0, 1, 2):
                up, down = b1.e(i, c), b1.f(i, c)
                self._e[i, a] = None if up is None else _COORD_LETTERS[up]
                self._f[i, a] = None if down is None else _COORD_LETTERS[down]
                self._eps[i, a] = b1.epsilon(i, c)
                self._phi[i, a] = b1.phi(i, c)

    def __repr__(self):
        return "LetterCrystal()"

    def e(self, i, b):
        return self._e[i, b]

    def f(self, i, b):
        return self._f[i, b]

    def epsilon(self, i, b):
        return self._eps[i, b]

    def phi(self, i, b):
        return self._phi[i, b]

    def elements(self):
        return list(ALL_LETTERS)

    def contains(self, b):
        return b in ALL_LETTERS


class ClassicalLetters(LetterCrystal):
    """B(Lambda_1): the 14 nonempty letters with operators 1 and 2 only."""

    index_set = (1, 2)
    name = "B(L1)"

    def elements(self):
        return list(LETTERS)

    def contains(self, b):
        return b in LETTERS


B1 = LetterCrystal()
CLASSICAL = ClassicalLetters()


# ---------------------------------------------------------------------------
# tableau view

# Letters sharing a rank sit in the same column of the two-chain display and are
# incomparable; any two letters of different rank are comparable.
_RANK = {"1": 0, "2": 1, "2_1": 2, "2_2": 3, "2_3": 4, "3": 4, "0h": 5, "0": 5,
         "b2_3": 6, "b3": 6, "b2_2": 7, "b2_1": 8, "b2": 9, "b1": 10}


def letter_le(a: str, b: str) -> bool:
    return a == b or _RANK[a] < _RANK[b]


def _counts_ok(word) -> bool:
    t = {a: 0 for a in LETTERS}
    for a in word:
        t[a] += 1
    sgn = lambda n: 1 if n > 0 else 0  # noqa: E731
    # 0h also counts against the 2_k and b2_k budgets
    return (
        t["2_3"] + t["0"] + t["0h"] + t["b2_3"] <= 1
        and t["2_1"] + t["2_2"] + t["2_3"] + t["0h"] <= 1
        and t["b2_3"] + t["b2_2"] + t["b2_1"] + t["0h"] <= 1
        and t["2_3"] + sgn(t["3"]) + t["0h"] <= 1
        and t["0h"] + sgn(t["b3"]) + t["b2_3"] <= 1
    )


def validate_tableau(word) -> bool:
    """Restricted semistandard one-row tableau, entries listed left to right."""
    word = list(word)
    if any(a not in LETTERS for a in word):
        return False
    if any(not letter_le(a, b) for a, b in zip(word, word[1:])):
        return False
    return _counts_ok(word)


def tableaux(j: int) -> list[tuple[str, ...]]:
    """All restricted semistandard tableaux with j entries."""
    out = []

    def extend(prefix):
        if len(prefix) == j:
            out.append(tuple(prefix))
            return
        for a in LETTERS:
            if prefix and not letter_le(prefix[-1], a):
                continue
            cand = prefix + [a]
            if _counts_ok(cand):
                extend(cand)

    extend([])
    return out


@lru_cache(maxsize=None)
def _tableau_table(l: int) -> dict:
    table = {}
    for j in range(l + 1):
        for t in tableaux(j):
            c = tableau_coord(t)
            if c in table:
                raise AssertionError(f"tableaux {table[c]} and {t} share coordinates {c}")
            table[c] = t
    return table


def coord_tableau(b, l: int | None = None) -> tuple[str, ...]:
    """Entries (left to right) of the tableau whose coordinates are b."""
    if l is None:
        l = max(1, _size(b) // UNIT)
    try:
        return _tableau_table(l)[tuple(b)]
    except KeyError:
        raise ValueError(f"{b} is not an element of B_{l}") from None


def tableau_word(entries) -> tuple[str, ...]:
    """Tensor word alpha_j (x) ... (x) alpha_1 of the tableau [alpha_1 ... alpha_j]."""
    return tuple(reversed(tuple(entries)))


def word_tableau(word) -> tuple[str, ...]:
    return tuple(reversed(tuple(word)))


# ---------------------------------------------------------------------------
# B-natural

NATURAL_NODES = ("1'", "2'", "3'", "0'", "b3'", "b2'", "b1'")
_NATURAL_ARROWS = {
    2: [("1'", "2'"), ("3'", "0'"), ("0'", "b3'"), ("b2'", "b1'")],
    1: [("2'", "3'"), ("b3'", "b2'")],
    0: [("b2'", "1'"), ("b1'", "2'")],
}


class NaturalCrystal(Crystal):
    name = "B_nat"

    def __init__(self):
        self._f = {(i, a): b for i, arrows in _NATURAL_ARROWS.items() for a, b in arrows}
        self._e = {(i, b): a for i, arrows in _NATURAL_ARROWS.items() for a, b in arrows}

    def __repr__(self):
        return "NaturalCrystal()"

    def e(self, i, b):
        return self._e.get((i, b))

    def f(self, i, b):
        return self._f.get((i, b))

    def epsilon(self, i, b):
        n = 0
        while (b := self.e(i, b)) is not None:
            n += 1
        return n

    def phi(self, i, b):
        n = 0
        while (b := self.f(i, b)) is not None:
            n += 1
        return n

    def elements(self):
        return list(NATURAL_NODES)

    def contains(self, b):
        return b in NATURAL_NODES


BNAT = NaturalCrystal()


def natural_apply(i: int, direction: str, n: str):
    return BNAT.apply(i, direction, n)


def natural_string(i: int, n: str) -> tuple[int, int]:
    return BNAT.string_data(i, n)


def crystal_edges(crystal: Crystal, elements=None):
    """(source, target, i) for every lowering arrow, in element order."""
    elements = crystal.elements() if elements is None else elements
    return [(b, c, i) for b in elements for i in crystal.index_set
            if (c := crystal.f(i, b)) is not None]
