import pytest

from weitzenbock.parsing import parse_ncpoly
from weitzenbock.series import catalan_numbers
from weitzenbock.sl2 import (
    dyck_profile,
    dyck_words,
    generate_up_to,
    is_dyck,
    minimal_monomial,
    products_of_degree,
    verify_span,
)


def nc(text):
    return parse_ncpoly(text, arity=2)


@pytest.fixture(scope="module")
def records():
    return generate_up_to(10)


def test_first_generators(records):
    w = {r.id: r.element for r in records}
    assert w[1] == nc("[x,y]")
    assert w[2] == nc("x*[x,y]*y - y*[x,y]*x")
    assert w[3] == nc("x*[x,y]^2*y - y*[x,y]^2*x")
    assert w[4] == nc("x*w*y - y*w*x".replace("w", "(x*[x,y]*y - y*[x,y]*x)"))
    assert [r.id for r in generate_up_to(2)] == [1]


def test_counts(records):
    counts = [sum(r.degree == d for r in records) for d in range(2, 11, 2)]
    assert counts == catalan_numbers(4)


def test_minimal_monomials(records):
    w = {r.id: r.element for r in records}
    assert minimal_monomial(w[1]) == (0, 1)
    assert minimal_monomial(w[2]) == (0, 0, 1, 1)
    assert minimal_monomial(w[1] * w[2] * w[2]) == (0, 1, 0, 0, 1, 1, 0, 0, 1, 1)


def test_dyck():
    prefix, ok = dyck_profile((0, 0, 1, 1))
    assert ok and prefix == [(1, 0), (2, 0), (2, 1), (2, 2)]
    prefix, ok = dyck_profile((0, 1, 0, 0, 1, 1, 0, 0, 1, 1))
    assert ok and prefix == [(1, 0), (1, 1), (2, 1), (3, 1), (3, 2), (3, 3), (4, 3), (5, 3), (5, 4), (5, 5)]
    assert not is_dyck((1, 0))
    assert [len(dyck_words(n)) for n in range(6)] == catalan_numbers(5)


def test_products(records):
    ids = [p[0] for p in products_of_degree(records, 6)]
    assert ids == [(1, 1, 1), (1, 2), (2, 1), (3,), (4,)]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_span(records, n):
    assert verify_span(records, n)["ok"]


def test_bad_degree():
    with pytest.raises(ValueError):
        generate_up_to(5)


def test_json(records):
    j = records[1].to_json()
    assert j["name"] == "w2" and j["construction"] == {"wrap": ["w1"]} and j["minimal_monomial"] == "xxyy"
