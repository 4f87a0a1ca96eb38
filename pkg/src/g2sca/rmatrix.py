"""Combinatorial R-matrices and energy functions.

Words in B_l (x) B_1 are pairs (Coord, letter); images in B_1 (x) B_l are
(letter, Coord).  ``r_apply`` raises to a classical highest-weight element,
maps it by the table and replays the lowering path.  ``r_insertion`` is an
independent tableau-level algorithm built from the maps xi, eta, theta.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import NamedTuple

from .a1 import A1Crystal, A1Element, a1_aff_r, a1_apply, a1_h_hat, a1_r_hat, a1_string  # noqa: F401
from .crystal import (B1, BNAT, CLASSICAL, UNIT, Coord, PerfectCrystal, coord_tableau,
                      tableau_coord, tableau_word, u)
from .tensor import TensorProduct, raise_to_classical_hw

ONE = "1"
EMPTY = "e"


class AffineElement(NamedTuple):
    """z^exponent payload."""

    exponent: int
    payload: object

    def __str__(self):
        return f"z^{self.exponent} {self.payload}"


class AffineCrystal:
    """Affinization: 0-operators shift the exponent."""

    def __init__(self, crystal):
        self.crystal = crystal
        self.index_set = crystal.index_set

    def e(self, i, x):
        b = self.crystal.e(i, x.payload)
        return None if b is None else AffineElement(x.exponent + (i == 0), b)

    def f(self, i, x):
        b = self.crystal.f(i, x.payload)
        return None if b is None else AffineElement(x.exponent - (i == 0), b)

    def epsilon(self, i, x):
        return self.crystal.epsilon(i, x.payload)

    def phi(self, i, x):
        return self.crystal.phi(i, x.payload)


@lru_cache(maxsize=None)
def bl_b1(l: int) -> TensorProduct:
    return TensorProduct(PerfectCrystal(l), B1)


@lru_cache(maxsize=None)
def b1_bl(l: int) -> TensorProduct:
    return TensorProduct(B1, PerfectCrystal(l))


def _hw_j(b) -> int | None:
    if b[1:] == (0, 0, 0, 0, 0) and b[0] % UNIT == 0:
        return b[0] // UNIT
    return None


HW_LETTERS = ("1", "e", "2", "2_3", "0", "b3", "b1")


def _check_hw(l, w):
    b, beta = w
    j = _hw_j(b)
    if j is None or j > l or beta not in HW_LETTERS:
        raise ValueError(f"{b} (x) {beta} is not a highest-weight element of B_{l} (x) B_1")
    lowest = {"1": 0, "e": 0, "2": 1, "2_3": 1, "0": 1, "b3": 2, "b1": 1}[beta]
    if j < lowest:
        raise ValueError(f"{b} (x) {beta} is not a highest-weight element of B_{l} (x) B_1")
    return j, beta


def _c(*thirds):
    return Coord(*(2 * t for t in thirds))


def r_hw(l: int, w):
    """R on the highest-weight elements (j,0,...,0) (x) b'."""
    j, beta = _check_hw(l, w)
    if beta == "1":
        if j == l:
            return ONE, u(l)
        if j == l - 1:
            return EMPTY, u(l)
        return ONE, _c(3 * (j + 1), 0, 0, 0, 0, 3)
    if beta == "e":
        return (ONE, u(l - 1)) if j == l else (EMPTY, u(j))
    if beta == "2":
        if j == l:
            return ONE, _c(3 * (l - 1), 3, 0, 0, 0, 0)
        return ONE, _c(3 * (j - 1), 3, 3, 3, 0, 0)
    if beta == "2_3":
        return ONE, _c(3 * (j - 1), 1, 1, 3, 0, 0)
    if beta == "0":
        return ONE, _c(3 * (j - 1), 0, 3, 3, 0, 0)
    if beta == "b3":
        return ONE, _c(3 * (j - 2), 3, 0, 0, 0, 0)
    # b1
    return (ONE, _c(0, 0, 0, 0, 0, 3)) if j == 1 else (ONE, u(j - 2))


def h_hw(l: int, w) -> int:
    j, beta = _check_hw(l, w)
    if j == l and beta == "1":
        return 0
    if (j == l - 1 and beta == "1") or (j == l and beta in ("2", "e")):
        return -1
    return -2


@lru_cache(maxsize=None)
def r_apply(l: int, w):
    """(R(w), H(w)) for w in B_l (x) B_1."""
    w = (Coord(*w[0]), w[1])
    src = bl_b1(l)
    if not src.contains(w):
        raise ValueError(f"{w} is not in B_{l} (x) B_1")
    hw, path = raise_to_classical_hw(src, w)
    img = path.replay(b1_bl(l), r_hw(l, hw))
    if img is None:
        raise RuntimeError(f"replay of {path.indices()} from R({hw}) left the crystal")
    return img, h_hw(l, hw)


def r_energy(l: int, w) -> int:
    return r_apply(l, w)[1]


def r_inverse(l: int, w):
    """Inverse of R: B_1 (x) B_l -> B_l (x) B_1."""
    return _inverse_table(l)[(w[0], Coord(*w[1]))]


@lru_cache(maxsize=None)
def _inverse_table(l):
    return {r_apply(l, w)[0]: w for w in bl_b1(l).elements()}


def aff_r(l: int, left, right):
    """R^Aff(z^m b (x) z^n b') = z^{n+H} b~' (x) z^{m-H} b~."""
    m, b = left
    n, beta = right
    (beta2, b2), h = r_apply(l, (b, beta))
    return AffineElement(n + h, beta2), AffineElement(m - h, b2)


# B_1 (x) B_1

def r_b1b1(w):
    return tuple(w)


def h_b1b1(w) -> int:
    """Energy on B_1 (x) B_1 under the level-1 normalization."""
    return r_apply(1, (tableau_coord([w[0]]), w[1]))[1]


# B-natural (x) B_1

RBAR_HW = {"1": ("1", "1'"), "2_1": ("1", "3'"), "e": ("1", "b2'"), "0h": ("e", "1'")}


@lru_cache(maxsize=None)
def bnat_b1() -> TensorProduct:
    return TensorProduct(BNAT, B1)


@lru_cache(maxsize=None)
def b1_bnat() -> TensorProduct:
    return TensorProduct(B1, BNAT)


@lru_cache(maxsize=None)
def rbar_apply(w):
    """R-bar: B-natural (x) B_1 -> B_1 (x) B-natural."""
    w = tuple(w)
    src = bnat_b1()
    if not src.contains(w):
        raise ValueError(f"{w} is not in B_nat (x) B_1")
    hw, path = raise_to_classical_hw(src, w)
    if hw[0] != "1'" or hw[1] not in RBAR_HW:
        raise RuntimeError(f"unexpected highest-weight element {hw}")
    img = path.replay(b1_bnat(), RBAR_HW[hw[1]])
    if img is None:
        raise RuntimeError(f"replay of {path.indices()} left the crystal")
    return img


# Isomorphisms fixed by one value, propagated along every arrow.

def propagate_isomorphism(src, dst, seed, image):
    """Extend seed -> image to the connected component by intertwining e_i and f_i.

    Raises ValueError on a conflict; returns the partial map otherwise.
    """
    table = {seed: image}
    todo = deque([seed])
    while todo:
        w = todo.popleft()
        v = table[w]
        for i in src.index_set:
            for op in ("e", "f"):
                w2 = getattr(src, op)(i, w)
                v2 = getattr(dst, op)(i, v)
                if (w2 is None) != (v2 is None):
                    raise ValueError(f"{op}_{i} defined on only one side at {w} -> {v}")
                if w2 is None:
                    continue
                if w2 in table:
                    if table[w2] != v2:
                        raise ValueError(f"conflict at {w2}: {table[w2]} vs {v2}")
                    continue
                table[w2] = v2
                todo.append(w2)
    return table


@lru_cache(maxsize=None)
def rbar_level_table(l: int) -> dict:
    """R-bar: B_l (x) B-natural -> B-natural (x) B_l, from u_l (x) 1' -> 1' (x) u_l."""
    src = TensorProduct(PerfectCrystal(l), BNAT)
    dst = TensorProduct(BNAT, PerfectCrystal(l))
    table = propagate_isomorphism(src, dst, (u(l), "1'"), ("1'", u(l)))
    if len(table) != src.size():
        raise RuntimeError(f"B_{l} (x) B_nat is not connected from u_l (x) 1'")
    return table


def rbar_level(l: int, w):
    return rbar_level_table(l)[(Coord(*w[0]), w[1])]


# ---------------------------------------------------------------------------
# insertion algorithm

_PAIR = TensorProduct(CLASSICAL, B1)


def classify_pair(a: str, beta: str):
    """Highest-weight element of the classical component containing a (x) beta."""
    hw, _ = raise_to_classical_hw(_PAIR, (a, beta))
    return hw


@lru_cache(maxsize=None)
def _classical_power(n: int) -> TensorProduct:
    return TensorProduct(*([B1] * n))


def _transport(word, source_hw, target_hw):
    """The classical isomorphism component(source_hw) -> component(target_hw) at word."""
    word = tuple(word)
    hw, path = raise_to_classical_hw(_classical_power(len(word)), word)
    if hw != tuple(source_hw):
        raise ValueError(f"{word} lies in the component of {hw}, not {tuple(source_hw)}")
    out = path.replay(_classical_power(len(target_hw)), tuple(target_hw))
    if out is None:
        raise RuntimeError(f"replay failed transporting {word}")
    return out


@lru_cache(maxsize=None)
def xi(pair):
    return _transport(pair, ("1", "0"), ("1",))


@lru_cache(maxsize=None)
def xi_inv(letter):
    return _transport(letter if isinstance(letter, tuple) else (letter,), ("1",), ("1", "0"))


@lru_cache(maxsize=None)
def eta(triple):
    return _transport(triple, ("1", "1", "2"), ("1", "2", "1"))


@lru_cache(maxsize=None)
def theta(triple):
    return _transport(triple, ("1", "1", "2_3"), ("1", "2_3", "1"))


def _at(word, i, fn, width):
    # apply fn to the 1-based positions i .. i+width-1
    word = tuple(word)
    return word[:i - 1] + tuple(fn(word[i - 1:i - 1 + width])) + word[i - 1 + width:]


def _chain(word, fn, count):
    # fn_1 fn_2 ... fn_count: the rightmost factor acts first
    for i in range(count, 0, -1):
        word = _at(word, i, fn, 3)
    return word


def r_insertion(l: int, w):
    """R on B_l (x) B_1 by tableau insertion; returns (letter, Coord)."""
    b, beta = w
    alpha = coord_tableau(Coord(*b), l)
    image = _insert(l, alpha, beta)
    return image[0], tableau_coord(image[1])


def _insert(l, alpha, beta):
    j = len(alpha)
    word = tableau_word(alpha) + (beta,)
    if beta == EMPTY:
        if j == l:
            return alpha[-1], alpha[:-1]
        return EMPTY, alpha
    if j == 0:
        # the component of the vacuum (x) beta
        return (EMPTY, (beta,)) if l == 1 else (ONE, (beta, "b1"))
    kind = classify_pair(alpha[0], beta)[1]
    if kind == "1":
        if j == l:
            return alpha[-1], (beta,) + alpha[:-1]
        if j == l - 1:
            return EMPTY, (beta,) + alpha
        return ONE, (beta,) + alpha + ("b1",)
    if kind == "2":
        if j == l:
            q = _chain(word, eta, l - 1)
            return q[0], tuple(reversed(q[1:]))
        q = _chain(word, eta, j - 1)
        q = _at(q, 1, xi_inv, 1)
        p, r, rest = q[0], q[1], q[2:]
        return p, tuple(reversed(rest)) + (r,)
    if j == 1:
        return alpha[0], (beta,)
    if kind == "2_3":
        q = _chain(word, theta, j - 1)
        return q[0], tuple(reversed(q[1:]))
    if kind == "0":
        r = xi((alpha[0], beta))[0]
        sub = classify_pair(alpha[1], r)[1]
        if sub == "1":
            p, q = xi_inv(alpha[-1])
            return p, (r,) + alpha[1:-1] + (q,)
        if sub == "2":
            q = _at(word, j, xi, 2)
            q = _chain(q, eta, j - 2)
            return q[0], tuple(reversed(q[1:]))
        raise ValueError(f"no insertion rule for {alpha} (x) {beta}")
    if kind == "b1":
        return alpha[-1], alpha[1:-1]
    raise ValueError(f"no insertion rule for {alpha} (x) {beta}")
