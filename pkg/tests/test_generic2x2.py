import random

import pytest

from weitzenbock.derivations import LinearDerivation, apply_derivation
from weitzenbock.generic2x2 import (
    CBAR_NAMES,
    GenericMatrix,
    Trace2x2,
    TraceDerivation,
    TraceElem,
    cbar,
    example_delta,
    example_generators,
    exp_w_delta,
    matrix_realization,
    trace_derivation_apply,
    verify_cbar_constants,
)
from weitzenbock.kernel import kernel_at
from weitzenbock.parsing import parse_ncpoly
from weitzenbock.poly import CPoly

X = GenericMatrix.generic("x")
Y = GenericMatrix.generic("y")


def test_generators_realize_generic_matrices():
    assert matrix_realization(TraceElem.x()) == X
    assert matrix_realization(TraceElem.y()) == Y
    assert matrix_realization(TraceElem.one()) == GenericMatrix.scalar(1)


@pytest.mark.parametrize("i", range(4))
@pytest.mark.parametrize("j", range(4))
def test_structure_constants(i, j):
    a, b = TraceElem.basis(i), TraceElem.basis(j)
    assert matrix_realization(a * b) == matrix_realization(a) * matrix_realization(b)


def test_displayed_products():
    x0, y0 = TraceElem.x0(), TraceElem.y0()
    assert x0 * x0 == TraceElem.scalar(cbar("u/2"))
    assert x0 * y0 == TraceElem.scalar(cbar("t/2")) + TraceElem.z() / 2


def test_trace_identities():
    x0 = matrix_realization(TraceElem.x0())
    assert matrix_realization(cbar("u")) == GenericMatrix.scalar(x0.det() * -2)
    comm = X * Y - Y * X
    assert matrix_realization(cbar("t^2 - u*v")) == comm * comm


def test_induced_values():
    d = example_delta("fix-x")
    assert [c.to_str(CBAR_NAMES) for c in d.cbar_images] == ["0", "p", "0", "u", "2*t"]
    lin = example_delta("chain5").cbar_linear()
    # single Jordan chain q -> p -> v -> t -> u, up to scalars
    assert lin.is_nilpotent
    assert [[int(c) for c in row] for row in lin.matrix] == [
        [0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 2],
        [1, 0, 0, 0, 0],
    ]


def test_zero_derivation():
    zero = TraceDerivation(CPoly.zero(5), CPoly.zero(5), TraceElem.zero(), TraceElem.zero())
    assert not trace_derivation_apply(zero, TraceElem.x() * TraceElem.y())


@pytest.mark.parametrize("name", ["fix-x", "chain5"])
def test_scalar_constants(name):
    res = verify_cbar_constants(name, max_degree=6)
    assert res["ok"] and all(res["constants"])


def test_syzygy_and_aliases():
    assert verify_cbar_constants("7.3", max_degree=2)["syzygy"]
    assert example_generators("7.4") == example_generators("chain5")
    with pytest.raises(ValueError):
        example_delta("7.5")


def test_exp_fix_x():
    w = cbar("t^2 - u*v")
    res = exp_w_delta(w, "fix-x")
    assert res["images"]["x"] == TraceElem.x()
    assert res["images"]["y"] == TraceElem.y() + TraceElem.x().scale(w)
    assert res["inverse_ok"] and res["divisible_by_disc"] and res["in_R"]


def test_exp_chain5():
    u, t, v = cbar("u"), cbar("t"), cbar("v")
    for w in (u, cbar("t^2 - u*v")):
        res = exp_w_delta(w, "chain5")
        assert res["images"]["x"] == TraceElem.x() + TraceElem.scalar(
            w * v / 2 + w ** 2 * t / 2 + w ** 3 * u / 6)
        assert res["images"]["y"] == TraceElem.y() + TraceElem.x().scale(w) + TraceElem.scalar(
            w ** 2 * v / 4 + w ** 3 * t / 6 + w ** 4 * u / 24)
        assert res["inverse_ok"]


def test_exp_rejects_non_constant():
    with pytest.raises(ValueError):
        exp_w_delta(cbar("q"), "fix-x")


def test_exp_with_zero_is_identity():
    res = exp_w_delta(CPoly.zero(5), "fix-x")
    assert res["images"] == {"x": TraceElem.x(), "y": TraceElem.y()}


def test_leibniz_random():
    rng = random.Random(2)

    def rand():
        return TraceElem([CPoly.monomial(tuple(rng.randint(0, 1) for _ in range(5)), rng.randint(-2, 2))
                          for _ in range(4)])

    for name in ("fix-x", "chain5"):
        d = example_delta(name)
        for _ in range(10):
            a, b = rand(), rand()
            assert trace_derivation_apply(d, a * b) == (
                trace_derivation_apply(d, a) * b + a * trace_derivation_apply(d, b))


def test_context():
    ctx = Trace2x2()
    basic = LinearDerivation.basic(2)
    c = ctx.reduce(parse_ncpoly("[x,y]", arity=2))
    assert c == TraceElem.z()
    kb = kernel_at(ctx, basic, multidegree=(2, 1))
    assert cbar("p*t - q*u") in [b.coeffs[0] for b in kb.basis]
    assert all(not ctx.derive(basic, b) for b in kb.basis)
