import json

import pytest

from main import dispatch
from thom.qpoly import builtin_q


def run(capsys, *argv):
    code = dispatch(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tp_k2(capsys):
    code, out, _ = run(capsys, "tp", "--k", "2", "--codim", "0")
    assert code == 0
    assert out.strip() == "c_1^2 + c_2"


def test_tp_json_is_deterministic(capsys):
    _, first, _ = run(capsys, "tp", "--k", "3", "--format", "json")
    _, second, _ = run(capsys, "tp", "--k", "3", "--format", "json")
    assert first == second
    payload = json.loads(first)
    assert payload["k"] == 3 and payload["codim"] == 0


def test_tp_writes_output_file(capsys, tmp_path):
    target = tmp_path / "tp1.txt"
    code, out, _ = run(capsys, "tp", "--k", "1", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "c_1\n"


def test_verify_table1(capsys):
    code, out, _ = run(capsys, "verify-table1", "--kmax", "5")
    assert code == 0
    assert out.splitlines()[0] == "PASS 5/5"


def test_verify_table1_with_perturbed_q(capsys, write_json):
    path = write_json("q4.json", builtin_q(4).perturbed((0, 1, 0, 0)).to_file_model().model_dump())
    code, out, _ = run(capsys, "verify-table1", "--kmax", "4", "--q", path)
    assert code == 1
    assert out.splitlines()[0] == "FAIL 3/4"
    assert any(line.startswith("k=4 ") for line in out.splitlines())


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--k", "2", "--n", "3", "--seed", "7")
    assert code == 0
    assert out.strip() == "EQUAL"


def test_tp3(capsys):
    code, _, _ = run(capsys, "tp3", "--radius", "6")
    assert code == 0


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--k", "2", "--radius", "4", "--format", "json")
    assert code == 0
    assert json.loads(out)["verdict"] == "PASS"


def test_ggl_n2(capsys):
    code, out, _ = run(capsys, "ggl", "--n", "2")
    assert code == 0
    assert out.startswith("PASS n=2 delta=1/24")


def test_ggl_rejects_n1(capsys):
    code, _, err = run(capsys, "ggl", "--n", "1")
    assert code == 2
    assert err.strip().splitlines()[-1].startswith("error:")


def test_mdeg(capsys, write_json):
    ideal = write_json("ideal.json", {"N": 2, "generators": [[1, 1]]})
    weights = write_json("weights.json", {"r": 2, "eta": [[1, 0], [0, 1]]})
    code, out, _ = run(capsys, "mdeg", "--ideal", ideal, "--weights", weights)
    assert code == 0
    assert out.strip() == "lambda_1 + lambda_2"


def test_residue_spec(capsys, write_json):
    spec = write_json(
        "spec.json",
        {
            "k": 2,
            "numerator": [{"exp": [0, 0], "coeff": "1"}],
            "linear_factors": [{"z": ["1", "0"]}, {"z": ["1", "1"]}],
        },
    )
    code, out, _ = run(capsys, "residue", "--spec", spec)
    assert code == 0
    assert out.strip() == "1"


def test_residue_spec_with_chern_tail(capsys, write_json):
    spec = write_json(
        "spec.json",
        {
            "k": 1,
            "symbols": [{"name": "c_1", "degree": 1}],
            "numerator": [{"exp": [1, 0], "coeff": "1"}],
            "linear_factors": [{"z": ["1"]}],
            "extra_series": [{"name": "chern"}],
        },
    )
    code, out, _ = run(capsys, "residue", "--spec", spec)
    assert code == 0
    assert out.strip() == "-c_1"


def test_unknown_flag_is_an_input_error(capsys):
    code, out, err = run(capsys, "tp", "--k", "2", "--bogus")
    assert code == 2
    assert out == ""
    lines = err.strip().splitlines()
    assert len(lines) == 1 and lines[0].startswith("error:")


def test_missing_file_is_an_input_error(capsys, tmp_path):
    code, _, err = run(capsys, "mdeg", "--ideal", str(tmp_path / "none.json"), "--weights", "w.json")
    assert code == 2
    assert err.strip().splitlines()[-1].startswith("error:")


def test_malformed_spec_is_an_input_error(capsys, write_json):
    spec = write_json("spec.json", {"k": 2, "numerator": [{"exp": [0], "coeff": "1"}]})
    code, _, _ = run(capsys, "residue", "--spec", spec)
    assert code == 2


@pytest.mark.parametrize("argv", [["tp", "--k", "0"], ["ggl", "--n", "2", "--delta", "0.5"], ["tp", "--k", "6"]])
def test_invalid_values_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2
