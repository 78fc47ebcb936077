import csv
import io
import json
from importlib import resources

import jsonschema
import pytest

from lieres import cli, coefficients
from lieres.cli import TIMING_MASK, main

SCHEMA = json.loads(resources.files("lieres").joinpath("schemas/report.schema.json").read_text(encoding="utf-8"))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    return code, data


def masked(data):
    return {k: v for k, v in data.items() if k not in TIMING_MASK}


def test_coeff_a_example(capsys):
    code, out, _ = run(capsys, "coeff", "a", "--lambda", "2,1", "--mu", "2,1")
    assert code == 0 and out == "1\n"


def test_coeff_a_variants(capsys):
    assert run(capsys, "coeff", "a", "--lambda", "2", "--mu", "1", "--unpadded")[1] == "1\n"
    code, data = run_json(capsys, "coeff", "a", "--lambda", "2", "--mu", "", "--n", "3", "--method", "character")
    assert code == 0 and data["result"]["value"] == 2 and data["result"]["irreducible"] == [3]


def test_coeff_b_and_expand(capsys):
    assert run(capsys, "coeff", "b", "--lambda", "1", "--mu", "1") == (0, "1\n", "")
    code, out, _ = run(capsys, "expand", "m", "--mu", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows == [["lambda", "coeff"], ["2", "1"], ["1", "-1"]]
    code, data = run_json(capsys, "expand", "m", "--mu", "2,1")
    assert data["result"]["mu"] == [2, 1]


def test_malformed_partition_is_usage_error(capsys):
    code, out, err = run(capsys, "coeff", "a", "--lambda", "2,1,0", "--mu", "1")
    assert code == 2 and out == ""
    assert err.startswith("lieres: error:") and err.count("\n") == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["verify", "inversion", "--mu", "2", "--n", "3"],
        ["verify", "resolution", "--mu", "2", "--m", "1", "--n", "4"],
        ["chartable", "--n", "0"],
        ["lyndon", "--k", "0"],
        ["freelie", "--m", "2", "--max-degree", "2", "--format", "csv"],
        ["sweep", "--max-mu-size", "1", "--max-n", "2", "--threads", "0"],
        ["coeff", "a", "--lambda", "1", "--mu", "1", "--method", "guess"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("lieres: error:") and err.count("\n") == 1


def test_verify_inversion(capsys):
    code, out, _ = run(capsys, "verify", "inversion", "--mu", "1", "--n", "4")
    assert code == 0 and out.startswith("PASS")


def test_verify_littlewood_and_orthogonality(capsys):
    code, data = run_json(capsys, "verify", "littlewood", "--max-size", "3")
    assert code == 0 and data["status"] == "PASS"
    code, data = run_json(capsys, "verify", "orthogonality", "--max-n", "5")
    assert code == 0 and data["result"]["passed"]


def test_verify_exactness_and_resolution(capsys):
    code, data = run_json(capsys, "verify", "exactness", "--m", "2", "--n", "2", "--i", "2")
    assert code == 0 and data["result"]["cohomology"][-1] == 4
    code, data = run_json(capsys, "verify", "resolution", "--mu", "1", "--m", "1", "--n", "3")
    assert code == 0 and data["result"]["passed"]
    code, out, _ = run(capsys, "verify", "resolution", "--mu", "2", "--m", "2", "--n", "4")
    assert code == 0 and "step 0" in out


def test_tables(capsys):
    code, out, _ = run(capsys, "chartable", "--n", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["lambda", "3", "2,1", "1,1,1"]
    assert rows[2] == ["2,1", "-1", "0", "2"]
    code, data = run_json(capsys, "lyndon", "--k", "3", "--basis", "s")
    assert data["result"]["terms"] == [{"idx": [2, 1], "num": 1, "den": 1}]
    code, data = run_json(capsys, "freelie", "--m", "2", "--max-degree", "2", "--copies", "2")
    assert len(data["result"]["basis"]) == 6


def test_sweeps(capsys):
    code, data = run_json(capsys, "sweep", "--max-mu-size", "0", "--max-n", "2")
    assert code == 0 and data["status"] == "PASS"
    code, data = run_json(capsys, "sweep", "--max-mu-size", "3", "--max-n", "7")
    assert code == 0 and data["result"]["fail_count"] == 0


def test_sweep_threads_match_serial(capsys):
    _, serial = run_json(capsys, "sweep", "--max-mu-size", "2", "--max-n", "4")
    _, threaded = run_json(capsys, "sweep", "--max-mu-size", "2", "--max-n", "4", "--threads", "2")
    assert serial["result"] == threaded["result"]


def test_forced_failure_reports_witness(capsys, monkeypatch):
    real = coefficients.m_expansion

    def corrupted(mu):
        exp = real(mu)
        if mu.size != 2:
            return exp
        (lam, c), *rest = exp.terms
        return coefficients.Expansion(exp.mu, ((lam, c + 1), *rest))

    monkeypatch.setattr(coefficients, "m_expansion", corrupted)
    code, out, _ = run(capsys, "sweep", "--max-mu-size", "2", "--max-n", "5")
    assert code == 1
    assert out.startswith("FAIL")
    assert "witness=" in out and "cycle_type" in out
    code, data = run_json(capsys, "verify", "inversion", "--mu", "1,1", "--n", "4")
    assert code == 1 and data["status"] == "FAIL"
    assert data["result"]["witness"]["cycle_type"]


@pytest.mark.parametrize(
    "argv",
    [
        ["coeff", "a", "--lambda", "3,1", "--mu", "2"],
        ["expand", "m", "--mu", "2,1"],
        ["verify", "resolution", "--mu", "1,1", "--m", "2", "--n", "3"],
        ["sweep", "--max-mu-size", "2", "--max-n", "4"],
    ],
)
def test_outputs_are_deterministic(capsys, argv):
    _, first = run_json(capsys, *argv)
    _, second = run_json(capsys, *argv)
    assert json.dumps(masked(first), sort_keys=True) == json.dumps(masked(second), sort_keys=True)
    assert run(capsys, *argv) == run(capsys, *argv)


def test_output_file(tmp_path, capsys):
    target = tmp_path / "table.csv"
    code, out, _ = run(capsys, "chartable", "--n", "4", "--format", "csv", "--output", str(target))
    assert code == 0 and out == ""
    again = run(capsys, "chartable", "--n", "4", "--format", "csv")[1]
    assert target.read_text(encoding="utf-8") == again


def test_module_entry_point():
    assert cli.EXIT_USAGE == 2
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
