"""Tensor products of crystals (Kashiwara's convention) and highest-weight search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

from .crystal import Crystal

CLASSICAL_INDICES = (1, 2)


class TensorProduct(Crystal):
    """b_1 (x) ... (x) b_n as a tuple, bracketed ((b_1 (x) b_2) (x) b_3) ...

    f_i acts on the left part P when phi_i(P) > eps_i(b_n), otherwise on b_n;
    e_i acts on P when phi_i(P) >= eps_i(b_n).
    """

    def __init__(self, *factors: Crystal):
        if not factors:
            raise ValueError("need at least one factor")
        self.factors = tuple(factors)
        common = set(factors[0].index_set)
        for c in factors[1:]:
            common &= set(c.index_set)
        self.index_set = tuple(sorted(common))
        self.name = " (x) ".join(c.name for c in factors)

    def __repr__(self):
        return f"TensorProduct{self.factors!r}"

    def __len__(self):
        return len(self.factors)

    def _prefix(self, i, w):
        # (eps, phi) of b_1 (x) ... (x) b_k for k = 1..n
        out = []
        eps = phi = None
        for c, b in zip(self.factors, w):
            e, p = c.epsilon(i, b), c.phi(i, b)
            if eps is None:
                eps, phi = e, p
            else:
                eps, phi = max(eps, e - (phi - eps)), max(p, phi + p - e)
            out.append((eps, phi))
        return out

    def position(self, i, direction, w) -> int:
        """Index of the factor the operator would act on."""
        pre = self._prefix(i, w)
        k = len(w) - 1
        while k > 0:
            left_phi = pre[k - 1][1]
            eps_k = self.factors[k].epsilon(i, w[k])
            if direction == "lower":
                if left_phi > eps_k:
                    k -= 1
                    continue
            elif left_phi >= eps_k:
                k -= 1
                continue
            break
        return k

    def _act(self, i, direction, w):
        k = self.position(i, direction, w)
        c = self.factors[k]
        v = c.f(i, w[k]) if direction == "lower" else c.e(i, w[k])
        if v is None:
            return None
        return w[:k] + (v,) + w[k + 1:]

    def e(self, i, w):
        return self._act(i, "raise", tuple(w))

    def f(self, i, w):
        return self._act(i, "lower", tuple(w))

    def epsilon(self, i, w):
        return self._prefix(i, w)[-1][0]

    def phi(self, i, w):
        return self._prefix(i, w)[-1][1]

    def elements(self):
        return list(product(*(c.elements() for c in self.factors)))

    def size(self) -> int:
        return prod(len(c.elements()) for c in self.factors)

    def contains(self, w):
        return len(w) == len(self.factors) and all(
            c.contains(b) for c, b in zip(self.factors, w))


def tensor_apply(crystal: TensorProduct, i: int, direction: str, w):
    return crystal.apply(i, direction, tuple(w))


def tensor_string(crystal: TensorProduct, i: int, w) -> tuple[int, int]:
    return crystal.epsilon(i, w), crystal.phi(i, w)


@dataclass(frozen=True)
class RaisePath:
    """Raising steps (i, factor position) in the order they were applied."""

    steps: tuple[tuple[int, int], ...] = ()

    def __len__(self):
        return len(self.steps)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.steps)

    def replay(self, crystal: Crystal, w):
        """Apply the matching f's in reverse order; None if any step is undefined."""
        for i, _ in reversed(self.steps):
            w = crystal.f(i, w)
            if w is None:
                return None
        return w


def raise_to_classical_hw(crystal: Crystal, w, indices=CLASSICAL_INDICES, bound=None):
    """Raise with the smallest applicable index until e_1, e_2 all vanish."""
    if bound is None:
        bound = crystal.size() if hasattr(crystal, "size") else len(crystal.elements())
    steps = []
    while True:
        for i in indices:
            v = crystal.e(i, w)
            if v is not None:
                pos = crystal.position(i, "raise", w) if hasattr(crystal, "position") else 0
                steps.append((i, pos))
                w = v
                break
        else:
            return w, RaisePath(tuple(steps))
        if len(steps) > bound:
            raise RuntimeError(f"raising did not terminate within {bound} steps")


def is_classical_hw(crystal: Crystal, w, indices=CLASSICAL_INDICES) -> bool:
    return all(crystal.e(i, w) is None for i in indices)


def is_level_hw(crystals, w, lam, indices=CLASSICAL_INDICES) -> bool:
    """Highest-weight test for b1 (x) b2 with b1 of weight lam (lam[i] = <h_i, lam>).

    b1 must be killed by every e_i and e_i^{lam(h_i)+1} must kill b2.
    """
    c1, c2 = crystals
    b1, b2 = w
    return all(c1.e(i, b1) is None and c2.epsilon(i, b2) <= lam[i] for i in indices)
