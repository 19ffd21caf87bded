"""Command line driver: determinism, schema conformance, exit codes."""

import json
import os
from pathlib import Path

import jsonschema
import pytest

from monoalg.cli import main

SCHEMA = json.loads(
    (Path(__file__).resolve().parents[1] / "schemas" / "report.schema.json")
    .read_text()
)
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)


def write_problem(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture
def prob_x4(tmp_path):
    return write_problem(tmp_path, "x4.json", {
        "rank": 1, "semigroup_generators": [[1]], "ideal_generators": [[4]],
    })


@pytest.fixture
def prob_square(tmp_path):
    return write_problem(tmp_path, "sq.json", {
        "rank": 2, "semigroup_generators": [[1, 0], [0, 1]],
        "ideal_generators": [[2, 0], [0, 2]],
    })


@pytest.fixture
def prob_hook(tmp_path):
    return write_problem(tmp_path, "hook.json", {
        "rank": 2, "semigroup_generators": [[1, 0], [1, 1], [1, 2]],
        "ideal_generators": [[2, 0], [2, 1], [2, 2], [2, 3], [2, 4]],
    })


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_json_deterministic(capsys, prob_square):
    code1, out1, _ = run(capsys, ["analyze", prob_square])
    code2, out2, _ = run(capsys, ["analyze", prob_square])
    assert code1 == code2 == 0
    assert out1 == out2


@pytest.mark.parametrize("command", [
    "analyze", "roots", "lnds", "aut", "oracle",
])
def test_schema_valid(capsys, prob_square, command):
    code, out, _ = run(capsys, [command, prob_square])
    assert code == 0
    VALIDATOR.validate(json.loads(out))


def test_schema_valid_witness(capsys, prob_hook):
    code, out, _ = run(capsys, ["witness", prob_hook])
    assert code == 0
    VALIDATOR.validate(json.loads(out))


def test_schema_valid_exp(capsys, prob_x4):
    code, out, _ = run(
        capsys, ["exp", prob_x4, "--alpha", "1", "--p", "1"])
    assert code == 0
    VALIDATOR.validate(json.loads(out))


def test_analyze_content(capsys, prob_x4):
    code, out, _ = run(capsys, ["analyze", prob_x4])
    report = json.loads(out)
    assert code == 0
    assert report["command"] == "analyze"
    assert report["result"]["complement"] == [[0], [1], [2], [3]]
    assert report["result"]["cofinite"] is True
    assert len(report["input_sha256"]) == 64


def test_rationals_are_strings(capsys, prob_x4):
    _, out, _ = run(capsys, ["aut", prob_x4])
    result = json.loads(out)["result"]
    flat = json.dumps(result)
    assert "1/1" in flat  # every rational rendered as num/den


def test_parse_error_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out, err = run(capsys, ["analyze", str(bad)])
    assert code == 1
    assert "input error" in err and "line" in err


def test_missing_file_exit_1(capsys):
    code, _, err = run(capsys, ["analyze", "/nonexistent/p.json"])
    assert code == 1 and "input error" in err


def test_precondition_exit_2(capsys, tmp_path):
    unsaturated = write_problem(tmp_path, "uns.json", {
        "rank": 2, "semigroup_generators": [[1, 0], [1, 2]],
        "ideal_generators": [],
    })
    code, _, err = run(capsys, ["analyze", unsaturated])
    assert code == 2
    assert "not saturated" in err


def test_witness_on_octant_exit_2(capsys, prob_square):
    code, _, err = run(capsys, ["witness", prob_square])
    assert code == 2
    assert "every derivation lifts" in err


def test_dim_cap(capsys, tmp_path, monkeypatch):
    big = write_problem(tmp_path, "big.json", {
        "rank": 1, "semigroup_generators": [[1]], "ideal_generators": [[9]],
    })
    monkeypatch.setenv("MONOALG_MAX_DIM", "4")
    code, _, err = run(capsys, ["analyze", big])
    assert code == 2
    assert "MONOALG_MAX_DIM" in err or "dimension" in err


def test_text_format_agrees(capsys, prob_x4):
    _, json_out, _ = run(capsys, ["analyze", prob_x4])
    codet, text_out, _ = run(capsys, ["analyze", prob_x4, "--format", "text"])
    assert codet == 0
    report = json.loads(json_out)
    assert str(report["result"]["complement_size"]) in text_out
    assert report["input_sha256"] not in ("",)


def test_lnds_bound_warning(capsys, tmp_path):
    noncofinite = write_problem(tmp_path, "nc.json", {
        "rank": 2, "semigroup_generators": [[1, 0], [0, 1]],
        "ideal_generators": [[2, 5], [3, 2], [5, 0]],
    })
    code, out, _ = run(capsys, ["lnds", noncofinite, "--bound", "4"])
    assert code == 0
    report = json.loads(out)
    assert report["result"]["exact"] is False
    assert report["warnings"]
