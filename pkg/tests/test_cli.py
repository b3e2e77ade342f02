import json
import subprocess
import sys

import pytest

from webperm.cli import main
from webperm.verify import SUITES, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_web3(capsys):
    code, out, _ = run(capsys, "enumerate", "web", "3")
    assert code == 0
    assert out.split() == ["123", "132", "213", "231", "321"]


def test_enumerate_tilde_web5_json(capsys):
    code, out, _ = run(capsys, "enumerate", "tilde-web", "5", "--format", "json")
    assert json.loads(out) == [[1, 2, 3, 4, 5], [1, 4, 5, 2, 3], [3, 4, 1, 2, 5]]


def test_enumerate_delta_zero(capsys):
    assert run(capsys, "enumerate", "delta", "0")[1] == "\n"
    assert json.loads(run(capsys, "enumerate", "delta", "0", "--format", "json")[1]) == [[]]


@pytest.mark.parametrize("kind, n, count", [("andre", 5, 16), ("updown", 5, 16), ("delta", 5, 61), ("web", 5, 61)])
def test_enumerate_counts(capsys, kind, n, count):
    assert len(run(capsys, "enumerate", kind, str(n))[1].splitlines()) == count


def test_cap_exit_code(capsys):
    code, out, err = run(capsys, "enumerate", "web", "9")
    assert code == 2 and out == "" and "cap" in err
    assert run(capsys, "enumerate", "web", "9", "--max-n", "9")[0] == 0


def test_hard_cap_needs_override(capsys):
    assert run(capsys, "verify", "series", "--max-n", "11")[0] == 2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "no-such-suite"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["table", "gamma"])
    assert exc.value.code == 2


def test_table_seidel(capsys):
    code, out, _ = run(capsys, "table", "seidel", "9")
    lines = out.splitlines()
    assert lines[0] == "i,j,value"
    row8 = [int(l.split(",")[2]) for l in lines[1:] if l.startswith("8,")]
    assert row8 == [56, 48, 34, 17]


def test_table_f6(capsys):
    out = run(capsys, "table", "f", "6")[1]
    assert "6,1,3\n6,2,0\n6,3,3\n6,4,0\n6,5,2\n6,6,0\n" in out


def test_table_gamma3(capsys):
    out = run(capsys, "table", "gamma", "3", "--classical")[1]
    assert [l.split(",")[2] for l in out.splitlines() if l.startswith("3,")] == ["1", "2"]
    out = run(capsys, "table", "gamma", "3")[1]
    assert "3,0,1*t^2*alpha^2\n3,1,2*alpha\n" in out


def test_table_json(capsys):
    rows = json.loads(run(capsys, "table", "entringer", "2", "--format", "json")[1])
    assert rows[0] == {"i": 0, "j": 0, "value": 1}


def test_table_b_plus_cap(capsys):
    assert run(capsys, "table", "b-plus", "6")[0] == 2
    assert run(capsys, "table", "b-plus", "5")[0] == 0


def test_verify_report_shape(capsys):
    code, out, _ = run(capsys, "verify", "pk-mix", "--max-n", "5")
    report = json.loads(out)
    assert code == 0
    assert set(report) == {"suite", "params", "checks", "elapsed_ms"}
    assert report["params"] == {"max_n": 5, "max_chords": 6}
    ids = [c["id"] for c in report["checks"]]
    assert ids == sorted(ids)
    assert all(c["status"] == "pass" and c["witness"] is None for c in report["checks"])


def test_verify_output_deterministic(capsys):
    a = run(capsys, "verify", "chord", "--max-n", "5", "--max-chords", "4", "--no-timing")[1]
    b = run(capsys, "verify", "chord", "--max-n", "5", "--max-chords", "4", "--no-timing")[1]
    assert a == b


def test_verify_failure_exit_1(capsys, monkeypatch):
    monkeypatch.setitem(SUITES, "pk-mix", lambda n, m: iter([("bad", False, "witness")]))
    code, out, err = run(capsys, "verify", "pk-mix")
    assert code == 1
    assert json.loads(out)["checks"][0]["witness"] == "witness"
    assert "FAIL pk-mix/bad" in err


def test_threads_same_checks():
    a = run_suite("all", max_n=5, max_chords=4)
    b = run_suite("all", max_n=5, max_chords=4, threads=2)
    assert a.checks == b.checks and a.passed


def test_verify_all_small_under_budget():
    report = run_suite("all", max_n=6, max_chords=6)
    assert report.passed
    assert report.elapsed_ms < 120_000


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "webperm.cli", "enumerate", "web", "3"],
                         capture_output=True, text=True, check=True).stdout
    assert out == "123\n132\n213\n231\n321\n"
