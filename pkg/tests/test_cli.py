import json
import subprocess
import sys

import pytest

from weitzenbock.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_constants_free(capsys):
    code, out, _ = run(capsys, "constants", "--algebra", "free", "--jordan", "2", "--degree", "4")
    assert code == 0 and "dimension: 6" in out


def test_constants_comm(capsys):
    code, out, _ = run(capsys, "constants", "--algebra", "comm", "--jordan", "3", "--degree", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["dimension"] == 2
    assert [b["text"] for b in data["basis"]] == ["x^2", "2*x*z - y^2"]
    assert data["basis"][0]["poly"] == {"vars": ["x", "y", "z"], "terms": [{"coef": "1", "mono": [2, 0, 0]}]}


def test_constants_zero_dimensional(capsys):
    code, out, _ = run(capsys, "constants", "--jordan", "2", "--bidegree", "0,1", "--format", "json")
    assert code == 0 and json.loads(out)["dimension"] == 0 and json.loads(out)["basis"] == []


def test_constants_json_is_reparseable(capsys):
    from weitzenbock.parsing import parse_ncpoly, poly_from_json

    code, out, _ = run(capsys, "constants", "--jordan", "2", "--bidegree", "3,2", "--format", "json")
    data = json.loads(out)
    assert data["dimension"] == 5
    for b in data["basis"]:
        assert poly_from_json(b["poly"]) == parse_ncpoly(b["text"], arity=2)


@pytest.mark.parametrize("algebra,rank,extra", [
    ("metabelian2", "2", ["--bidegree", "3,2"]),
    ("grassmann-l2", "3", ["--degree", "3"]),
    ("wreath", "3", ["--degree", "2"]),
    ("trace2x2", "2", ["--bidegree", "2,1"]),
])
def test_constants_other_algebras(capsys, algebra, rank, extra):
    jordan = "3" if rank == "3" else "2"
    code, out, _ = run(capsys, "constants", "--algebra", algebra, "--rank", rank, "--jordan", jordan, *extra)
    assert code == 0 and "dimension:" in out


def test_matrix_option(capsys):
    code, out, _ = run(capsys, "constants", "--matrix", "0,1,0,0", "--degree", "2")
    assert code == 0 and "dimension: 2" in out


def test_layer_refusal(capsys, monkeypatch):
    monkeypatch.setenv("WEITZ_MAX_LAYER", "10")
    code, _, err = run(capsys, "constants", "--jordan", "2", "--degree", "4")
    assert code == 2 and "WEITZ_MAX_LAYER" in err


@pytest.mark.parametrize("argv", [
    ["constants", "--jordan", "x", "--degree", "2"],
    ["constants", "--jordan", "2"],
    ["constants", "--jordan", "2", "--matrix", "0,1,0,0", "--degree", "1"],
    ["constants", "--algebra", "metabelian2", "--rank", "3", "--jordan", "3", "--degree", "2"],
    ["schur", "--lambda", "1,2"],
    ["verify", "--suite", "nope"],
    ["exp-derivation", "--algebra", "trace2x2"],
    ["nonsense"],
])
def test_usage_errors(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_sl2_generators(capsys):
    code, out, _ = run(capsys, "sl2-generators", "--degree", "8", "--format", "json")
    data = json.loads(out)
    assert data["counts"] == [1, 1, 2, 5]
    assert data["generators"][1]["construction"] == {"wrap": ["w1"]}


def test_series_commands(capsys):
    code, out, _ = run(capsys, "hilbert-constants", "--degree", "6", "--format", "json")
    data = json.loads(out)
    assert data["a"]["trunc"] == 6 and {"deg": [0, 3], "coef": "2"} in data["a"]["coeffs"]
    code, out, _ = run(capsys, "schur", "--lambda", "2,1", "--degree", "4")
    assert out.strip() == "S_(2,1) = t1^2*t2 + t1*t2^2"
    code, out, _ = run(capsys, "multiplicity", "--algebra", "metabelian2", "--degree", "4", "--format", "json")
    assert code == 0 and json.loads(out)["multiplicities"]["multiplicities"][0] == {"lambda": [0, 0], "mult": "1"}


def test_exp_and_log(capsys):
    code, out, _ = run(capsys, "exp-derivation", "--algebra", "comm", "--matrix", "0,0,0,-2,0,0,0,1,0",
                       "--w", "x*z+y^2")
    assert code == 0 and "z -> z" in out
    images = [line.split(" -> ")[1] for line in out.strip().splitlines()]
    code, out, _ = run(capsys, "log-automorphism", "--assume-unipotent", "--images", "; ".join(images))
    assert code == 0 and out.splitlines()[1] == "y -> x*z^2 + y^2*z"
    code, _, _ = run(capsys, "log-automorphism", "--images", "; ".join(images))
    assert code == 2


def test_exp_trace(capsys):
    code, out, _ = run(capsys, "exp-derivation", "--algebra", "trace2x2", "--example", "7.3", "--w", "t^2-u*v",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["in_R"] and data["inverse_ok"]
    assert len(data["matrices"]["y"]) == 2


def test_verify_exit_codes_and_determinism(capsys):
    code, first, _ = run(capsys, "verify", "--suite", "sl2", "--degree", "10")
    assert code == 0 and "[1, 1, 2, 5, 14]" in first
    _, second, _ = run(capsys, "verify", "--suite", "sl2", "--degree", "10")
    assert first == second


def test_verify_failure_exit_code(capsys, monkeypatch):
    import weitzenbock.commutative as comm

    monkeypatch.setitem(comm.NOWICKI_SETS, "basic3", ((3,), ["x"]))
    code, out, _ = run(capsys, "verify", "--suite", "nowicki", "--max-degree", "4")
    assert code == 1 and "[FAIL] nowicki.basic3.generators" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "weitzenbock", "verify", "--suite", "nagata"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert "nu(y): y + (x*z + y^2)*z = y + x*z^2 + y^2*z" in res.stdout
