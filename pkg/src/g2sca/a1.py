"""The A1(1) perfect crystal of pairs (x1, x2) with x1 + x2 = l, its R-matrix and energy."""

from __future__ import annotations

from typing import NamedTuple

from .crystal import Crystal


class A1Element(NamedTuple):
    x1: int
    x2: int

    @property
    def level(self) -> int:
        return self.x1 + self.x2

    def __str__(self):
        return f"({self.x1},{self.x2})"


class A1Crystal(Crystal):
    index_set = (0, 1)

    def __init__(self, l: int):
        if l < 0:
            raise ValueError(f"level must be non-negative, got {l}")
        self.l = l
        self.name = f"A1_{l}"

    def __repr__(self):
        return f"A1Crystal({self.l})"

    def _ok(self, x1, x2):
        return A1Element(x1, x2) if x1 >= 0 and x2 >= 0 else None

    def e(self, i, a):
        x1, x2 = a
        return self._ok(x1 - 1, x2 + 1) if i == 0 else self._ok(x1 + 1, x2 - 1)

    def f(self, i, a):
        x1, x2 = a
        return self._ok(x1 + 1, x2 - 1) if i == 0 else self._ok(x1 - 1, x2 + 1)

    def epsilon(self, i, a):
        return a[i]

    def phi(self, i, a):
        return a[1 - i]

    def elements(self):
        return [A1Element(x1, self.l - x1) for x1 in range(self.l, -1, -1)]

    def contains(self, a):
        return len(a) == 2 and min(a) >= 0 and sum(a) == self.l


def a1_apply(i: int, direction: str, a):
    a = A1Element(*a)
    return A1Crystal(a.level).apply(i, direction, a)


def a1_string(i: int, a) -> tuple[int, int]:
    a = A1Element(*a)
    return A1Crystal(a.level).string_data(i, a)


def a1_r_hat(a, b):
    """R-hat((x1,x2) (x) (y1,y2)) = (y1',y2') (x) (x1',x2')."""
    x1, x2 = a
    y1, y2 = b
    m12, m21 = min(y1, x2), min(y2, x1)
    return (A1Element(y1 + m21 - m12, y2 + m12 - m21),
            A1Element(x1 + m12 - m21, x2 + m21 - m12))


def a1_h_hat(a, b) -> int:
    return -min(b[1], a[0])


def a1_aff_r(left, right, shift: int = 0):
    """Affine R-hat on (m, a), (n, b) meaning z^m a (x) z^n b.

    The energy used is shift + H-hat; shift = 2*l2 gives the scattering rule.
    """
    m, a = left
    n, b = right
    h = shift + a1_h_hat(a, b)
    b2, a2 = a1_r_hat(a, b)
    return (n + h, b2), (m - h, a2)
