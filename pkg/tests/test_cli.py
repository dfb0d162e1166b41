import csv
import io
import json
import subprocess
import sys

import pytest

from superjack.cache import ENV_VAR
from superjack.cli import run
from superjack.symfunc import clear_jack_cache


@pytest.fixture(autouse=True)
def cache_dir(monkeypatch, tmp_path):
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "cache"))
    return tmp_path / "cache"


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv)
    return code, json.loads(text)


def test_gram_example():
    code, doc = call_json("gram", "--n", "1", "--m", "1", "--degree", "2", "--theta", "symbolic",
                          "--format", "json")
    assert code == 0 and doc["pass"] is True
    assert doc["labels"] == [[2], [1, 1]]
    assert doc["matrix"][0] == ["(2*theta-2)/(theta+1)", "0"]
    assert doc["matrix"][1][0] == "0"


def test_superjack_example():
    code, doc = call_json("superjack", "--n", "1", "--m", "1", "--lambda", "2")
    assert code == 0
    assert doc["n"] == 1 and doc["m"] == 1 and doc["kernel"] is False
    terms = {tuple(t["exps"]): t["coeff"] for t in doc["terms"]}
    assert terms == {(2, 0): "1", (1, 1): "(-2)/(theta+1)"}


def test_jack_example():
    code, doc = call_json("jack", "--lambda", "1,1")
    assert code == 0
    assert doc["basis"] == "monomial"
    assert doc["terms"] == [{"partition": [1, 1], "coeff": "1"}]


def test_jack_powersum_basis():
    code, doc = call_json("jack", "--lambda", "1,1", "--basis", "powersum")
    assert code == 0
    assert {tuple(t["partition"]): t["coeff"] for t in doc["terms"]} == {(1, 1): "1/2", (2,): "-1/2"}


def test_superjack_in_kernel():
    code, doc = call_json("superjack", "--lambda", "2,2")
    assert code == 0 and doc["kernel"] is True and doc["terms"] == []


def test_rational_theta_is_rendered():
    code, doc = call_json("superjack", "--lambda", "2", "--theta", "3")
    assert code == 0 and doc["theta"] == "3"
    assert {tuple(t["exps"]): t["coeff"] for t in doc["terms"]} == {(2, 0): "1", (1, 1): "-1/2"}
    code, doc = call_json("gram", "--degree", "1", "--theta", "2/3")
    assert code == 0 and doc["matrix"] == [["-1/2"]]


def test_excluded_theta_is_structured_error():
    code, doc = call_json("superjack", "--lambda", "2", "--theta", "1")
    assert code == 1
    assert doc["error"] == "excluded-theta" and doc["command"] == "superjack"
    code, doc = call_json("jack", "--lambda", "2", "--theta=-1/2")
    assert code == 1 and doc["error"] == "excluded-theta"


def test_hermite_outside_fat_hook():
    code, doc = call_json("hermite", "--lambda", "2,2")
    assert code == 1 and doc["error"] == "not-in-fat-hook"


@pytest.mark.parametrize("argv", [
    ["gram"],
    ["jack", "--lambda", "1,2"],
    ["jack", "--lambda", "x"],
    ["frobnicate"],
    ["gram", "--degree", "-1"],
    ["gram", "--degree", "2", "--format", "xml"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    out = io.StringIO()
    assert run(argv, out) == 2
    assert out.getvalue() == ""
    assert "error" in capsys.readouterr().err


def test_hermite_and_eigen():
    code, doc = call_json("hermite", "--lambda", "1")
    assert code == 0
    assert {tuple(t["exps"]): t["coeff"] for t in doc["terms"]} == {(1, 0): "1", (0, 1): "(-1)/(theta)"}
    code, doc = call_json("eigen", "--lambda", "2,1", "--n", "2", "--m", "2")
    assert code == 0
    assert [v["order"] for v in doc["eigenvalues"]] == [1, 2, 3]
    code, doc = call_json("eigen", "--lambda", "1", "--order", "1")
    assert doc["eigenvalues"] == [{"order": 1, "value": "1"}]


@pytest.mark.parametrize("command", ["kernel-check", "reproducing-check", "hermite-gram"])
def test_checks_pass(command):
    code, doc = call_json(command, "--n", "2", "--m", "1", "--degree", "3")
    assert code == 0 and doc["pass"] is True


def test_reproducing_single_partition():
    code, doc = call_json("reproducing-check", "--lambda", "2")
    assert code == 0 and doc["cases"] == [{"partition": [2], "pass": True}]
    code, doc = call_json("reproducing-check", "--lambda", "2,2")
    assert code == 1 and doc["error"] == "not-in-fat-hook"


def test_bound_check():
    code, doc = call_json("bound-check", "--degree", "3", "--theta", "2", "--points", "10")
    assert code == 0 and doc["pass"] is True
    assert doc["checked"] == 10 * 7
    code, _ = call("bound-check", "--degree", "3")
    assert code == 2


def test_verify_all():
    code, doc = call_json("verify-all", "--degree", "4", "--n", "1", "--m", "1")
    assert code == 0 and doc["pass"] is True
    assert doc["summary"]["failed"] == 0
    assert doc["summary"]["total"] == len(doc["checks"]) >= 20
    assert all(c["pass"] for c in doc["checks"])


@pytest.mark.parametrize("argv", [
    ["gram", "--degree", "3", "--n", "2"],
    ["superjack", "--lambda", "3,1", "--n", "2"],
    ["jack", "--lambda", "3,2"],
    ["verify-all", "--degree", "2"],
])
def test_reports_are_byte_identical(argv, cache_dir):
    first = call(*argv)
    second = call(*argv)
    third = call(*argv, "--no-cache")
    assert first == second == third


def test_gram_csv_layout():
    code, text = call("gram", "--degree", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0][1:] == ["2", "1,1"]
    assert rows[1] == ["2", "(2*theta-2)/(theta+1)", "0"]
    assert rows[2][0] == "1,1" and rows[2][1] == "0"
    assert rows[-1][:2] == ["pass", "true"]


@pytest.mark.parametrize("argv", [
    ["jack", "--lambda", "2,1"],
    ["superjack", "--lambda", "2,1"],
    ["eigen", "--lambda", "2"],
    ["kernel-check", "--degree", "2"],
    ["bound-check", "--degree", "2", "--theta", "2", "--points", "3"],
    ["verify-all", "--degree", "1"],
])
def test_csv_for_every_command(argv):
    code, text = call(*argv, "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert len(rows) >= 2 and all(rows)


def test_cache_dir_flag_writes_entries(tmp_path):
    clear_jack_cache()
    target = tmp_path / "explicit"
    code, _ = call("jack", "--lambda", "2,1", "--cache-dir", str(target))
    assert code == 0 and any(target.glob("*.json"))


def test_no_cache_leaves_nothing(cache_dir):
    code, _ = call("jack", "--lambda", "3", "--no-cache")
    assert code == 0 and not cache_dir.exists()


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "superjack", "jack", "--lambda", "1,1", "--no-cache"],
                          capture_output=True, text=True, cwd=tmp_path)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["terms"] == [{"partition": [1, 1], "coeff": "1"}]
    proc = subprocess.run([sys.executable, "-m", "superjack", "gram"], capture_output=True, text=True,
                          cwd=tmp_path)
    assert proc.returncode == 2 and proc.stdout == ""


def test_disk_cache_is_transparent():
    clear_jack_cache()
    cold = call("jack", "--lambda", "4,1")
    clear_jack_cache()
    warm = call("jack", "--lambda", "4,1")
    assert cold == warm and cold[0] == 0
