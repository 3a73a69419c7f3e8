import pytest
from hypothesis import given, settings, strategies as st

from weitzenbock.parsing import ParseError, parse_cpoly, parse_ncpoly, poly_from_json, poly_to_json
from weitzenbock.poly import CPoly, NCPoly


def test_brackets_are_left_normed_commutators():
    assert parse_ncpoly("[x,y,y]", arity=2) == parse_ncpoly("x*y^2 - 2*y*x*y + y^2*x", arity=2)


def test_rationals_and_powers():
    f = parse_cpoly("x2^2*x3^2 - 8/3*x1*x3^3", arity=4)
    assert str(f.terms[(1, 0, 3, 0)]) == "-8/3"


def test_json_shapes():
    f = parse_ncpoly("3/2*x*y*x", arity=2)
    assert poly_to_json(f) == {"vars": ["x", "y"], "terms": [{"coef": "3/2", "word": [0, 1, 0]}]}
    g = parse_cpoly("x*y^2", arity=2)
    assert poly_to_json(g)["terms"] == [{"coef": "1", "mono": [1, 2]}]
    assert poly_from_json(poly_to_json(f)) == f
    assert poly_from_json(poly_to_json(g)) == g


@pytest.mark.parametrize("bad", ["x +", "x ** y", "q*x", "(x", "[x]"])
def test_errors(bad):
    with pytest.raises(ParseError):
        parse_ncpoly(bad, arity=2)


@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2)),
                       st.fractions(max_denominator=7), max_size=5))
@settings(max_examples=60, deadline=None)
def test_cpoly_json_round_trip(terms):
    f = CPoly(terms, 3)
    assert poly_from_json(poly_to_json(f), CPoly) == f
    assert parse_cpoly(f.to_str(), arity=3) == f
