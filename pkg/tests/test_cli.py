import json

import pytest

from cliffsym.cli import EXIT_FAIL, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_usage_errors(capsys):
    assert main(["verify", "nope"]) == EXIT_USAGE
    assert main(["rank", "polc"]) == EXIT_USAGE
    assert main(["cohomology", "flag", "--n", "3", "--cuts", "0,2,1"]) == EXIT_USAGE
    assert main(["verify", "quiver-hecke", "--cartan", "/nonexistent.json"]) == EXIT_USAGE
    assert main(["--help"]) == EXIT_OK


def test_resource_bound(capsys):
    assert main(["verify", "symmetric", "--n", "5"]) == EXIT_RESOURCE


def test_odd_elementary_table(capsys):
    code, data = run_json(capsys, "tables", "elementary", "--n", "3", "--parities", "all-odd")
    assert code == EXIT_OK
    assert data["rows"]["1"] == {"1": "x1", "2": "x1 - x2", "3": "x1 - x2 + x3"}
    assert data["rows"]["2"] == {"2": "x1x2", "3": "x1x2 - x1x3 + x2x3"}
    assert data["rows"]["3"] == {"3": "x1x2x3"}


def test_polc_rank(capsys):
    code, data = run_json(capsys, "rank", "polc", "--n", "3", "--order", "5")
    assert code == EXIT_OK
    # binomial(k + 2, 2)
    assert data["coefficients"] == [1, 3, 6, 10, 15, 21]


def test_grassmann_dims(capsys):
    code, data = run_json(capsys, "cohomology", "grassmann", "--n", "4", "--k", "2")
    assert code == EXIT_OK and data["matches"]
    assert [data["dims"][str(d)] for d in range(6)] == [1, 1, 2, 1, 1, 0]


def test_mixed_grassmann_mismatch_exits_one(capsys):
    code, data = run_json(capsys, "cohomology", "grassmann", "--n", "3", "--k", "2", "--parities", "0,1,0")
    assert code == EXIT_FAIL and not data["matches"]


@pytest.mark.parametrize("suite", ["nhc", "symmetric", "vanishing", "schubert", "freeness", "cyclotomic", "flag"])
def test_small_suites_pass(capsys, suite):
    code, data = run_json(capsys, "verify", suite, "--n", "2", "--max-degree", "3")
    assert code == EXIT_OK and data["passed"]
    assert data["reports"]


def test_quiver_hecke_with_cartan_file(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"size": 1, "parity": [1], "d": [[2]], "orientation": []}))
    code, data = run_json(capsys, "verify", "quiver-hecke", "--n", "2", "--max-degree", "2", "--cartan", str(path))
    assert code == EXIT_OK and data["passed"]


def test_output_is_deterministic(capsys):
    argv = ("tables", "schubert", "--n", "3", "--parities", "1,1,1")
    first = run(capsys, *argv)
    assert first == run(capsys, *argv)
    assert first[0] == EXIT_OK and first[1]


def test_parallel_matches_sequential(capsys):
    argv = ("verify", "symmetric", "--n", "2", "--max-degree", "3", "--format", "json")
    seq = run(capsys, *argv)
    par = run(capsys, *argv, "--jobs", "2")
    assert seq == par


def test_order_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("CLIFFSYM_ORDER", "3")
    code, data = run_json(capsys, "rank", "polc", "--n", "2")
    assert code == EXIT_OK and data["coefficients"] == [1, 2, 3, 4]
