from hypothesis import given, strategies as st

from g2sca.crystal import B1, LETTERS
from g2sca.tensor import TensorProduct, is_classical_hw, raise_to_classical_hw


def signature_position(crystal, i, w, lower):
    """Bracket rule: write phi '+' and eps '-' per factor as '-'*eps '+'*phi, cancel '+-' pairs."""
    seq = []
    for k, (c, b) in enumerate(zip(crystal.factors, w)):
        seq += [("-", k)] * c.epsilon(i, b) + [("+", k)] * c.phi(i, b)
    stack = []
    for sign, k in seq:
        if sign == "-" and stack and stack[-1][0] == "+":
            stack.pop()
        else:
            stack.append((sign, k))
    minus = [k for s, k in stack if s == "-"]
    plus = [k for s, k in stack if s == "+"]
    if lower:
        return plus[0] if plus else None
    return minus[-1] if minus else None


words = st.lists(st.sampled_from(B1.elements()), min_size=2, max_size=5)


@given(words, st.sampled_from([0, 1, 2]))
def test_tensor_rule_matches_signature_rule(w, i):
    tp = TensorProduct(*([B1] * len(w)))
    w = tuple(w)
    f = tp.f(i, w)
    k = signature_position(tp, i, w, lower=True)
    assert (f is None) == (k is None)
    if f is not None:
        assert [a != b for a, b in zip(w, f)].index(True) == k
    e = tp.e(i, w)
    k = signature_position(tp, i, w, lower=False)
    assert (e is None) == (k is None)
    if e is not None:
        assert [a != b for a, b in zip(w, e)].index(True) == k


def test_kashiwara_order_example():
    tp = TensorProduct(B1, B1)
    # f_1 acts on the left factor 1 of 1 (x) 1
    assert tp.f(1, ("1", "1")) == ("2", "1")
    assert tp.e(1, ("2", "1")) == ("1", "1")


@given(words)
def test_raise_reaches_highest_weight_and_replays(w):
    tp = TensorProduct(*([B1] * len(w)))
    hw, path = raise_to_classical_hw(tp, tuple(w))
    assert is_classical_hw(tp, hw)
    assert path.replay(tp, hw) == tuple(w)


def test_size_and_index_set():
    tp = TensorProduct(B1, B1, B1)
    assert tp.size() == 15 ** 3
    assert tp.index_set == (0, 1, 2)
    assert all(a in LETTERS or a == "e" for a in tp.elements()[5])
