from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from weitzenbock.series import (
    MultiplicityTable,
    NotDivisible,
    TruncSeries2,
    catalan_numbers,
    catalan_series,
    constants_hilbert_closed_form,
    divide_by_difference,
    hilbert_of,
    inverse_multiplicity_check,
    multiplicity_series,
    schur2,
    schur_decompose,
    specialize_v_to_t2,
)

N = 12


def mono(i, j, trunc=N, weights=(1, 1)):
    return TruncSeries2.monomial(i, j, 1, trunc, weights)


def test_schur_examples():
    assert schur2((1, 0)) == mono(1, 0) + mono(0, 1)
    assert schur2((1, 1)) == mono(1, 1)
    assert schur2((2, 1)) == mono(1, 1) * (mono(1, 0) + mono(0, 1))


def test_divide_by_difference():
    with pytest.raises(NotDivisible):
        divide_by_difference(mono(1, 0))


def test_decompose_examples():
    free = schur_decompose(hilbert_of("free"))
    for n in range(N + 1):
        for l2 in range(n // 2 + 1):
            assert free[(n - l2, l2)] == comb(n, l2) - (comb(n, l2 - 1) if l2 else 0)
    l2 = schur_decompose(hilbert_of("grassmann-l2"))
    assert l2.mult == {**{(n, 0): 1 for n in range(N + 1)}, **{(n - 1, 1): 1 for n in range(2, N + 1)}}
    assert schur_decompose(schur2((2, 1))).mult == {(2, 1): 1}


def test_multiplicity_series_examples():
    m, _ = multiplicity_series(schur_decompose(hilbert_of("grassmann-l2")))
    t, u = mono(1, 0), mono(0, 1)
    one = TruncSeries2.one(N)
    assert m == (one + t * u) * (one - t).inverse()
    _, mp = multiplicity_series(schur_decompose(hilbert_of("metabelian2")))
    w = (1, 2)
    t, v, one = mono(1, 0, N, w), mono(0, 1, N, w), TruncSeries2.one(N, w)
    assert mp == (one - t).inverse() + v * ((one - t) * (one - t) * (one - v)).inverse()
    empty = MultiplicityTable(N, {})
    assert not multiplicity_series(empty)[0]


def test_inverse_multiplicity_examples():
    _, mp = multiplicity_series(schur_decompose(hilbert_of("free")))
    assert inverse_multiplicity_check(mp) == hilbert_of("free")
    assert inverse_multiplicity_check(mono(1, 2, N, (1, 2))) == schur2((3, 2))
    assert not inverse_multiplicity_check(TruncSeries2({}, N, (1, 2)))


def test_catalan():
    c = catalan_series()
    assert c.coeff(0, 0) == 1 and c.coeff(0, 3) == 5
    assert c == TruncSeries2.one(N) + mono(0, 1) * c * c
    assert catalan_numbers(6) == [1, 1, 2, 5, 14, 42, 132]


def test_closed_forms():
    h, a = constants_hilbert_closed_form()
    assert a.coeff(1, 0) == 1 and a.coeff(0, 1) == 1 and a.coeff(1, 1) == 0
    assert all(h.coeff(i, 0) == 1 for i in range(N + 1))
    assert specialize_v_to_t2(h) == [comb(n, n // 2) for n in range(N + 1)]


@pytest.mark.parametrize("name", ["free", "grassmann-l2", "metabelian2"])
def test_round_trip(name):
    f = hilbert_of(name)
    _, mp = multiplicity_series(schur_decompose(f))
    assert inverse_multiplicity_check(mp) == f


def test_json_round_trip():
    h, _ = constants_hilbert_closed_form(6)
    data = h.to_json()
    assert data["trunc"] == 6 and {"deg": [0, 1], "coef": "1"} in data["coeffs"]
    assert TruncSeries2.from_json(data) == h


partitions = st.tuples(st.integers(0, 5), st.integers(0, 3)).map(lambda p: (p[0] + p[1], p[1]))


@given(st.dictionaries(partitions, st.integers(-4, 4).filter(bool), max_size=5))
@settings(max_examples=50, deadline=None)
def test_decompose_inverts_composition(mult):
    table = MultiplicityTable(10, mult)
    assert schur_decompose(table.to_series()).mult == table.mult


coeffs = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-3, 3), max_size=5)


@given(coeffs, coeffs)
@settings(max_examples=50, deadline=None)
def test_series_field_laws(a, b):
    f = TruncSeries2(a, 8)
    g = TruncSeries2.one(8) + TruncSeries2(b, 8) * mono(1, 0, 8)
    assert (f * g) / g == f
    assert f * g == g * f
