import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasiarr.polynomial import Polynomial

coeffs = st.lists(st.integers(-50, 50), max_size=6)


@pytest.mark.parametrize(
    "c, text",
    [
        ((), "0"),
        ((0, 0), "0"),
        ((-1, 1), "t - 1"),
        ((0, 2), "2t"),
        ((0, 2, -3, 1), "t^3 - 3t^2 + 2t"),
        ((1, 0, -1), "-t^2 + 1"),
        ((-5,), "-5"),
    ],
)
def test_format(c, text):
    assert str(Polynomial(c)) == text


def test_trim_and_degree():
    assert Polynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert Polynomial(()).degree == -1
    assert Polynomial.monomial(3).degree == 3


def test_from_terms_accumulates():
    assert Polynomial.from_terms([(2, 1), (0, -1), (2, 2)]) == Polynomial((-1, 0, 3))


@given(coeffs, coeffs, st.integers(-20, 20))
def test_ring_operations_evaluate(a, b, t):
    p, q = Polynomial(tuple(a)), Polynomial(tuple(b))
    assert (p + q)(t) == p(t) + q(t)
    assert (p - q)(t) == p(t) - q(t)
    assert (p * q)(t) == p(t) * q(t)
