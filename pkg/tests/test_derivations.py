import pytest
from hypothesis import given, settings, strategies as st

from weitzenbock.derivations import (
    Automorphism,
    JordanType,
    LinearDerivation,
    NotLocallyNilpotent,
    PolyDerivation,
    apply_derivation,
    exp_derivation,
    fixed_point_check,
    log_automorphism,
)
from weitzenbock.parsing import parse_cpoly, parse_ncpoly
from weitzenbock.poly import CPoly, NCPoly

basic = LinearDerivation.basic(2)
x, y = NCPoly.gens(2)


def nc(text, m=2):
    return parse_ncpoly(text, arity=m)


def test_basic_action():
    assert apply_derivation(basic, y) == x
    assert not apply_derivation(basic, x * y - y * x)
    assert apply_derivation(basic, x * y) == x * x


def test_jordan_convention():
    d = LinearDerivation.from_jordan((3, 2))
    xs = CPoly.gens(5)
    assert [apply_derivation(d, v) for v in xs] == [CPoly.zero(5), xs[0], xs[1], CPoly.zero(5), xs[3]]
    assert JordanType.parse("3,2") == JordanType((3, 2))
    with pytest.raises(ValueError):
        JordanType((2, 3))


def test_exp_basic():
    phi = exp_derivation(basic)
    assert phi.images == [x, y + x]


def test_log_of_shear():
    d = log_automorphism(Automorphism([x, y + x]))
    assert d == basic


def test_nagata_images():
    d = LinearDerivation([[0, 0, 0], [-2, 0, 0], [0, 1, 0]])
    w = parse_cpoly("x*z + y^2")
    nu = exp_derivation(PolyDerivation.scaled(w, d), CPoly)
    assert nu.images == [parse_cpoly(s) for s in (
        "x - 2*(x*z + y^2)*y - (x*z + y^2)^2*z", "y + (x*z + y^2)*z", "z")]
    assert log_automorphism(nu) == PolyDerivation.scaled(w, d)


def test_fixed_points():
    phi = exp_derivation(basic)
    assert fixed_point_check(phi, x * y - y * x)
    assert not fixed_point_check(phi, y)
    assert fixed_point_check(phi, x)


def test_refusals():
    with pytest.raises(NotLocallyNilpotent):
        exp_derivation(LinearDerivation([[1, 0], [0, 0]]))
    with pytest.raises(NotLocallyNilpotent):
        log_automorphism(Automorphism([x + y * y, y + x * x]))
    with pytest.raises(ValueError):
        PolyDerivation.scaled(parse_cpoly("y"), LinearDerivation.basic(2))


def test_triangular_up_to_renaming():
    z, yv, xv = CPoly.gens(3)[::-1]
    phi = Automorphism([xv + yv * yv, yv + z, z])
    assert phi.is_triangular
    assert log_automorphism(phi).images[2] == CPoly.zero(3)


def _jordan_types(max_m):
    def parts(n, top):
        if n == 0:
            yield ()
        for k in range(min(n, top), 0, -1):
            for rest in parts(n - k, k):
                yield (k,) + rest
    return [p for m in range(1, max_m + 1) for p in parts(m, m)]


@pytest.mark.parametrize("jt", _jordan_types(5))
def test_log_exp_round_trip(jt):
    d = LinearDerivation.from_jordan(jt)
    for kind in (NCPoly, CPoly):
        assert log_automorphism(exp_derivation(d, kind)) == d.as_poly(kind)


words = st.lists(st.integers(0, 2), max_size=4).map(tuple)
polys3 = st.dictionaries(words, st.integers(-4, 4), max_size=4).map(lambda d: NCPoly(d, 3))
mats = st.lists(st.lists(st.integers(-2, 2), min_size=3, max_size=3), min_size=3, max_size=3)


@given(mats, polys3, polys3)
@settings(max_examples=60, deadline=None)
def test_leibniz(mat, f, g):
    d = LinearDerivation(mat)
    assert apply_derivation(d, f * g) == apply_derivation(d, f) * g + f * apply_derivation(d, g)


@given(polys3, polys3)
@settings(max_examples=40, deadline=None)
def test_exp_is_multiplicative(f, g):
    phi = exp_derivation(LinearDerivation.basic(3))
    assert phi(f * g) == phi(f) * phi(g)
