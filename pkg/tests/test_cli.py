import json

import pytest

from decat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sym_mul(capsys):
    code, out, _ = run(capsys, "sym", "mul", "[[1]]", "[[1]]")
    assert code == 0
    assert json.loads(out) == [{"coeff": "1", "partition": [1, 1]}, {"coeff": "1", "partition": [2]}]


def test_sym_mul_accepts_words_and_terms(capsys):
    _, out, _ = run(capsys, "sym", "mul", "e1", '[{"coeff": "2", "partition": [1]}]')
    assert json.loads(out) == [{"coeff": "2", "partition": [1, 1]}, {"coeff": "2", "partition": [2]}]


def test_sym_straighten_and_wedge(capsys):
    _, out, _ = run(capsys, "sym", "straighten", "[0,2]")
    assert json.loads(out) == {"partition": [1, 1], "sign": -1, "zero": False}
    _, out, _ = run(capsys, "sym", "wedge", "2", "1", "[[2,2]]", "[[1]]")
    assert json.loads(out) == [{"coeff": "1", "partition": [1, 1, 1]}]


def test_trace_dims_table(capsys):
    _, out, _ = run(capsys, "trace", "dims", "--n", "0", "--m", "0", "--deg", "4")
    data = json.loads(out)
    assert data["dims"]["0"] == 1
    assert all(isinstance(v, int) for v in data["dims"].values())


def test_current_nf(capsys):
    _, out, _ = run(capsys, "current", "nf", "E0 F0", "--n", "1", "--text")
    assert out.strip() == "1*[1_1] + 1*[F0^(1) E0^(1) 1_1]"
    _, out, _ = run(capsys, "current", "nf", "E0 F0", "--n", "1")
    words = [t["word"] for t in json.loads(out)["terms"]]
    assert {"E": [[0, 1]], "F": [[0, 1]], "n": 1, "tau": []} in words


def test_current_mul_basis_phi(capsys):
    code, out, _ = run(capsys, "current", "mul", "E0", "F0", "--n", "1")
    assert code == 0 and len(json.loads(out)["terms"]) == 2
    _, out, _ = run(capsys, "current", "basis", "--n", "0", "--m", "2", "--deg", "0")
    assert json.loads(out) == [{"E": [[0, 1]], "F": [], "n": 0, "tau": []}]
    _, out, _ = run(capsys, "current", "phi", "E1^(2)", "--n", "1", "--text")
    assert out.strip() == "1*[F1^(2) 1_-1]"


def test_trace_commands(capsys):
    _, out, _ = run(capsys, "trace", "compose", "E1[1] F1[]", "--n", "0", "--text")
    assert "b+[1]" in out
    _, out, _ = run(capsys, "trace", "tocurrent", "E1[2]", "--n", "0", "--text")
    assert out.strip() == "1*[E2^(1) 1_0]"
    code, out, _ = run(capsys, "trace", "verify", "E1[1] E2[0]", "--n", "0")
    assert code == 0 and json.loads(out)["two_path"]


def test_blm_and_bubbles(capsys):
    _, out, _ = run(capsys, "blm", "qbinom", "2", "1")
    assert json.loads(out) == {"-1": "1", "1": "1"}
    _, out, _ = run(capsys, "blm", "mul", "E", "F", "--n", "1", "--text")
    assert "F^(1)E^(1)1_1" in out
    code, out, _ = run(capsys, "bubbles", "identity", "--m", "5")
    assert code == 0 and json.loads(out)["equals_power_sum"]
    _, out, _ = run(capsys, "bubbles", "series", "--deg", "2")
    assert set(json.loads(out)) == {"0", "1", "2"}


def test_vpres_commands(capsys):
    _, out, _ = run(capsys, "vpres", "nf", "t1 t1", "--source", "0,0", "--n", "0")
    assert json.loads(out)["terms"] == []
    code, out, _ = run(capsys, "vpres", "dims", "--n", "0", "--a", "1", "--b", "1", "--delta", "0", "--deg", "4")
    assert code == 0 and json.loads(out)["match"]


def test_hh_compute(capsys, tmp_path):
    spec = {
        "objects": ["x", "y"],
        "homs": {"x->x": {"basis": ["1x"]}, "y->y": {"basis": ["1y"]}, "x->y": {"basis": ["f"]}},
        "compose": [
            {"g": "1x", "f": "1x", "result": [{"basis": "1x", "coeff": 1}]},
            {"g": "1y", "f": "1y", "result": [{"basis": "1y", "coeff": 1}]},
            {"g": "1y", "f": "f", "result": [{"basis": "f", "coeff": 1}]},
            {"g": "f", "f": "1x", "result": [{"basis": "f", "coeff": 1}]},
        ],
        "identities": {"x": "1x", "y": "1y"},
    }
    path = tmp_path / "a2.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "hh", "compute", "--input", str(path), "--maxdeg", "4")
    assert code == 0
    data = json.loads(out)
    assert data["0"] == {"free": 2, "torsion": []}
    assert all(data[k] == {"free": 0, "torsion": []} for k in ("1", "2", "3"))


def test_errors_go_to_stderr_with_a_nonzero_exit(capsys, tmp_path):
    code, out, err = run(capsys, "hh", "compute", "--input", str(tmp_path / "missing.json"))
    assert code == 2 and not out and "error" in err
    code, _, err = run(capsys, "current", "nf", "E0 Q1", "--n", "0")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "verify", "unknown")
    assert code == 2 and "unknown suite" in err
    code, _, err = run(capsys, "verify", "r7", "--bound", "ij_max")
    assert code == 2


def test_verify_reports_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "r7", "--bound", "ij_max=2", "--bound", "n_max=1", "--no-timing")
    assert code == 0
    assert json.loads(out)["passed"]
    code, again, _ = run(capsys, "verify", "r7", "--bound", "ij_max=2", "--bound", "n_max=1", "--no-timing")
    assert again == out


@pytest.mark.parametrize(
    "argv",
    [
        ("sym", "schur", "e2 p3"),
        ("current", "nf", "F1 E0^(2) F0", "--n", "2"),
        ("trace", "compose", "F2[1] B[2] E1[3]", "--n", "-1"),
    ],
)
def test_output_is_byte_identical_across_runs(capsys, argv):
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


def test_trace_verify_runs_a_trace_suite(capsys):
    code, out, _ = run(capsys, "trace", "verify", "--suite", "ja", "--text")
    assert code == 0 and out.startswith("suite ja: PASS")
    code, _, err = run(capsys, "trace", "verify")
    assert code == 2 and "error" in err
