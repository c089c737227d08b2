import pytest
from hypothesis import given, settings, strategies as st

from semidual.polynomials import PolynomialSyntaxError, format_polynomial, parse_polynomial, weighted_degree


def test_basic_parse():
    assert parse_polynomial("x^2 - 3*x*y + 2", "xy") == {(2, 0): 1, (1, 1): -3, (0, 0): 2}
    assert parse_polynomial("(x+y)^2", "xy") == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert parse_polynomial(" - x  *  y ", "xy") == {(1, 1): -1}
    assert parse_polynomial("x - x", "xy") == {}


@pytest.mark.parametrize(
    "text,column",
    [("2x", 2), ("x y", 3), ("x^", 3), ("z", 1), ("x + * y", 5), ("(x", 3)],
)
def test_errors_carry_columns(text, column):
    with pytest.raises(PolynomialSyntaxError) as err:
        parse_polynomial(text, "xy")
    assert err.value.column == column


def test_weighted_degree():
    assert weighted_degree((2, 1), (1, 3)) == 5


polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-9, 9).filter(bool), max_size=5
)


@settings(max_examples=100, deadline=None)
@given(polys)
def test_format_round_trip(p):
    assert parse_polynomial(format_polynomial(p, "xy"), "xy") == p
