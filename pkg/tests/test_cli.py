import json
import subprocess
import sys

import pytest

from hyparr.cli import infer_variables, main

A7 = "z*(4*x+z)*(2*x+y)*(6*x+y+3*z)*(8*x+2*y+5*z)"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    data = json.loads(out)
    assert data["schema"] == 1
    return data


def test_infer_variables():
    assert infer_variables(["x*y"]) == ["x", "y"]
    assert infer_variables(["x*z"]) == ["x", "y", "z"]
    assert infer_variables(["x1*x3"]) == ["x1", "x2", "x3"]


def test_primes(capsys):
    data = run_json(capsys, "primes", "-e", A7, "--threads", "1")
    assert data["rho0"] == 16
    assert data["nongood"] == [2]
    assert data["nonlucky"]["3"] == [2]


def test_gb(capsys):
    data = run_json(capsys, "gb", "-e", "x+y", "-e", "x+3*y+z")
    assert data["basis"] == ["x + y", "2*y + z"]
    assert data["excluded_primes"] == [2]


def test_charpoly(capsys):
    data = run_json(capsys, "charpoly", "-e", "x*y*z")
    assert data["charpoly"] == [-1, 3, -3, 1]
    assert data["agree"]


def test_text_output(capsys):
    code, out, _ = run(capsys, "charpoly", "-e", "x*y*z")
    assert code == 0 and out.splitlines()[0] == "t^3 - 3*t^2 + 3*t - 1"


def test_parse_and_file(capsys, tmp_path):
    f = tmp_path / "a.json"
    f.write_text(json.dumps({"vars": ["x", "y", "z"], "matrix": [[1, 0, 0], [0, 1, 0], [1, 1, 1]]}))
    data = run_json(capsys, "parse", "-f", str(f))
    assert data["forms"] == ["x", "y", "x + y + z"]
    assert data["essential"]


def test_lattice(capsys):
    data = run_json(capsys, "lattice", "-e", "(x-y)*(x-z)*(y-z)")
    assert len(data["flats"]) == 5
    assert sorted(r["mu"] for r in data["flats"]) == [-1, -1, -1, 1, 2]


def test_tutte_coboundary(capsys):
    data = run_json(capsys, "tutte", "-e", "(x-y)*(x-z)*(y-z)")
    assert data["tutte"] == {"0,1": 1, "1,0": 1, "2,0": 1}
    data = run_json(capsys, "coboundary", "-e", "x")
    assert data["coboundary"] == {"0,0": -1, "0,1": 1, "1,0": 1}


def test_count_and_ffmethod(capsys):
    data = run_json(capsys, "count", "-e", "(x-y)*(x-z)*(y-z)", "--q", "5")
    assert data["complement"] == 60
    data = run_json(capsys, "ffmethod", "-e", "x*y*z*(x+y)*(x+2*y+z)", "--primes", "3,5,7,11", "--threads", "1")
    assert data["matches_subset_expansion"]
    assert sum(data["histograms"]["3"]) == 27


def test_equiv(capsys):
    data = run_json(capsys, "equiv", "-e", "x*y*z*(x+y)*(x+2*y+z)", "--prime", "2", "--threads", "1")
    assert not data["equivalent"] and data["witness"] == [0, 2, 4]
    assert data["good"] and not data["lucky"] and not data["coprime_to_rho0"]
    data = run_json(capsys, "equiv", "-e", A7, "--prime", "3", "--threads", "1")
    assert data["equivalent"] and data["coprime_to_rho0"]


def test_jacobian(capsys):
    data = run_json(capsys, "jacobian", "-e", "x*y*z*(x+y)*(x+2*y+z)", "--order", "degrevlex")
    assert data["excluded_primes"] == [2, 3, 5]


def test_affine_input_is_coned_for_prime_scans(capsys):
    code, out, err = run(capsys, "primes", "-e", "x*(x-1)*y", "--threads", "1")
    assert code == 0 and "affine" in err


def test_check_only(capsys):
    data = run_json(capsys, "check", "--only", "theorem77", "--count", "10")
    assert data["passed"] and [r["name"] for r in data["results"]] == ["theorem77"]


def test_check_duplicate_hyperplane(capsys):
    code, out, err = run(capsys, "check", "-e", "x*y*(x+y)*(2*x+2*y)")
    assert code == 1 and "coincide" in err and out == ""


@pytest.mark.parametrize("argv", [
    ["nosuch"],
    ["primes"],
    ["charpoly", "-e", "x*(y"],
    ["charpoly", "-e", "x", "--bogus"],
    ["count", "-e", "x*y"],
    ["gb", "-e", "x", "--order", "grlex"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""


def test_domain_errors(capsys, tmp_path):
    assert run(capsys, "lattice", "-e", "x*3*x")[0] == 1
    assert run(capsys, "lattice", "-e", A7, "--prime", "2")[0] == 1
    assert run(capsys, "primes", "-e", "(x-y)*(x-z)*(y-z)")[0] == 1
    assert run(capsys, "count", "-e", "x*y*z", "--q", "1000", "--point-budget", "1000")[0] == 1
    f = tmp_path / "bad.json"
    f.write_text("{ not json")
    assert run(capsys, "parse", "-f", str(f))[0] == 2


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "hyparr.cli", "check", "--json", "--count", "8", "--seed", "3"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["passed"]


def test_check_default_seed_all_pass(capsys):
    data = run_json(capsys, "check")
    failed = [r["name"] for r in data["results"] if not r["passed"]]
    assert failed == []
    assert len(data["results"]) == 11
