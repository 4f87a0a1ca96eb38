from hypothesis import given, strategies as st

from g2sca.a1 import A1Crystal, A1Element, a1_aff_r, a1_h_hat, a1_r_hat


def pairs(draw_l1, draw_l2):
    return st.tuples(
        st.integers(0, draw_l1).map(lambda x: A1Element(x, draw_l1 - x)),
        st.integers(0, draw_l2).map(lambda y: A1Element(y, draw_l2 - y)),
    )


@given(st.integers(1, 9), st.integers(1, 9), st.data())
def test_r_hat_is_inverse_of_swapped_r_hat(l1, l2, data):
    a, b = data.draw(pairs(l1, l2))
    b2, a2 = a1_r_hat(a, b)
    assert b2.level == l2 and a2.level == l1
    assert a1_r_hat(b2, a2) == (a, b)


@given(st.integers(1, 6), st.integers(1, 6))
def test_r_hat_intertwines(l1, l2):
    from g2sca.tensor import TensorProduct

    src = TensorProduct(A1Crystal(l1), A1Crystal(l2))
    dst = TensorProduct(A1Crystal(l2), A1Crystal(l1))
    for w in src.elements():
        v = a1_r_hat(*w)
        for i in (0, 1):
            w2 = src.f(i, w)
            v2 = dst.f(i, tuple(v))
            assert (w2 is None) == (v2 is None)
            if w2 is not None:
                assert tuple(a1_r_hat(*w2)) == v2


def test_h_hat_range():
    assert a1_h_hat((3, 0), (3, 0)) == 0
    assert a1_h_hat((7, 5), (5, 1)) == -1
    assert min(a1_h_hat((x, 6 - x), (y, 3 - y)) for x in range(7) for y in range(4)) == -3


def test_affine_rule_on_first_example():
    out = a1_aff_r((0, A1Element(7, 5)), (-8, A1Element(5, 1)), shift=4)
    assert out == ((-5, (1, 5)), (-3, (11, 1)))
