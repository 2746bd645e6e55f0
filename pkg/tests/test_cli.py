import csv
import io
import json
import subprocess
import sys

import pytest

from qfun.cli import RunConfig, UsageError, main, render_report
from qfun.suites import SUITES, SuiteOptions, instances, run_suite, worker_count


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_Q(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "Q", "--lambda", "1", "--vars", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["terms"] == [
        {"coeff_re": "2/1", "coeff_im": "0/1", "exponents": [1, 0]},
        {"coeff_re": "2/1", "coeff_im": "0/1", "exponents": [0, 1]},
    ]


def test_compute_zero_when_too_long(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "Q", "--lambda", "2,1", "--vars", "1")
    assert code == 0
    assert json.loads(out)["terms"] == []


def test_compute_P(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "P", "--lambda", "1", "--vars", "2")
    assert code == 0
    terms = json.loads(out)["terms"]
    assert [t["coeff_re"] for t in terms] == ["1/1", "1/1"]
    assert [t["exponents"] for t in terms] == [[1, 0], [0, 1]]


def test_compute_terms_are_in_grevlex_order(capsys):
    _, out, _ = run(capsys, "compute", "--lambda", "2", "--vars", "2")
    exps = [t["exponents"] for t in json.loads(out)["terms"]]
    assert exps == [[2, 0], [1, 1], [0, 2]]


def test_compute_skew(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "skew", "--lambda", "2,1", "--mu", "1",
                       "--vars", "1", "--format", "pretty")
    assert code == 0
    assert out.strip() == "Q(2,1/1) = 2*x1^2"


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "--lambda", "1", "--vars", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["coeff_re", "coeff_im", "e1", "e2"]
    assert rows[1:] == [["2/1", "0/1", "1", "0"], ["2/1", "0/1", "0", "1"]]


@pytest.mark.parametrize("argv", [
    ["compute", "--lambda", "1,2"],
    ["compute", "--lambda", "2,2"],
    ["compute", "--lambda", "x"],
    ["compute", "--kind", "skew", "--lambda", "2"],
    ["compute", "--kind", "skew", "--lambda", "2", "--mu", "3"],
    ["compute", "--lambda", "1", "--vars", "-1"],
    ["verify", "--suite", "unknown"],
    ["table", "--degree", "-2"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_verify_schur_pfaffian(capsys):
    code, out, err = run(capsys, "verify", "--suite", "schur-pfaffian", "--vars", "4")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 1 and rows[0]["equal"] is True
    assert rows[0]["parameters"] == {"n": 4}
    assert "1/1" in err


def test_verify_cauchy(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "cauchy", "--vars", "2", "--degree", "4")
    assert code == 0
    assert all(json.loads(line)["equal"] for line in out.splitlines())


def test_verify_specialized_is_seeded(capsys):
    a = run(capsys, "verify", "--suite", "sylvester", "--mode", "specialized", "--seed", "3")
    b = run(capsys, "verify", "--suite", "sylvester", "--mode", "specialized", "--seed", "3")
    assert a[0] == 0 and a[1] == b[1]


def test_verify_failure_exits_1(capsys, monkeypatch):
    from qfun import suites
    from qfun.identities import report

    monkeypatch.setenv("QFUN_THREADS", "1")
    monkeypatch.setattr(suites, "_run_schur", lambda name, kw: [report("fake", 1, 2)])
    code, out, _ = run(capsys, "verify", "--suite", "bijection")
    assert code == 1
    row = json.loads(out.splitlines()[0])
    assert row["equal"] is False and row["lhs"] == "1" and row["rhs"] == "2"


def test_table_examples(capsys):
    code, out, _ = run(capsys, "table", "--degree", "3", "--vars", "2")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert [r["lambda"] for r in rows] == [[], [1], [2], [3], [2, 1]]

    _, out, _ = run(capsys, "table", "--degree", "0", "--vars", "1")
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 1
    assert rows[0]["terms"] == [{"coeff_re": "1/1", "coeff_im": "0/1", "exponents": [0]}]

    _, out, _ = run(capsys, "table", "--degree", "6", "--vars", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["lambda", "weight", "expansion"]
    assert len(rows) == 1 + 14


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "t.csv"
    code, out, _ = run(capsys, "table", "--degree", "2", "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("lambda,weight,expansion\n")


def test_output_is_byte_identical_across_runs(capsys):
    argv = ["table", "--degree", "5", "--vars", "3"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


@pytest.mark.parametrize("suite", ["stability", "laplace", "pjn"])
def test_parallel_output_matches_serial(suite):
    opts = SuiteOptions(vars=2) if suite != "laplace" else SuiteOptions()
    serial = run_suite(suite, opts, render=render_report, workers=1)
    parallel = run_suite(suite, opts, render=render_report, workers=3)
    assert serial == parallel


def test_worker_count_honours_env(monkeypatch):
    monkeypatch.setenv("QFUN_THREADS", "1")
    assert worker_count() == 1
    monkeypatch.setenv("QFUN_THREADS", "junk")
    assert worker_count() >= 1


def test_every_suite_has_instances():
    for name in SUITES:
        assert instances(name), name
    with pytest.raises(KeyError):
        instances("nope")


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig(command="table", degree=-1)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qfun", "compute", "--lambda", "1", "--vars", "1", "--format", "pretty"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "Q(1) = 2*x1\n"
