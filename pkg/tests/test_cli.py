import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from ctxlogic.audit import AuditReport, Verdict
from ctxlogic.cli import EXIT_OK, EXIT_REFUTED, EXIT_SCRIPT, EXIT_USAGE, run
from ctxlogic.prob_core import Proposition

DATA = Path(__file__).parent / "data"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_demo_context_recognition():
    code, out, _ = call("demo", "context-recognition", "--C", "-1/4")
    assert code == EXIT_OK
    assert "second projection [1, 0]" in out
    code, out, _ = call("demo", "context-recognition", "--C=1/4", "--json")
    assert json.loads(out)["output_marginals"][1] == ["0", "1"]


def test_demo_out_of_range():
    code, _, err = call("demo", "context-recognition", "--C", "1/2")
    assert code == EXIT_USAGE and "outside" in err


def test_enumerate():
    code, out, _ = call("enumerate", "--rows", "2", "--cols", "2")
    assert code == EXIT_OK
    assert len(out.splitlines()) == 4
    code, out, _ = call("enumerate", "--rows", "4", "--cols", "4", "--limit", "3", "--json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["col_map"] for r in rows] == [[1, 1, 1, 1], [1, 1, 1, 2], [1, 1, 1, 3]]
    assert rows[0]["dense"] == [[1, 1, 1, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]


def test_eval_files():
    assert call("eval", str(DATA / "empty.ctx")) == (EXIT_OK, "", "")
    code, out, _ = call("eval", str(DATA / "context_recognition.ctx"))
    assert code == EXIT_OK and out.splitlines()[-1] == "[0, 1]"
    code, out, _ = call("--json", "eval", str(DATA / "context_recognition.ctx"))
    assert Proposition.from_json(json.loads(out)[-1]) == Proposition((0, 1))


def test_eval_decimal_digits():
    code, out, _ = call("eval", str(DATA / "connectives.ctx"), "--decimal-digits", "3")
    assert "1/4  ~ 0.250" in out.splitlines()


def test_eval_script_error(tmp_path):
    bad = tmp_path / "bad.ctx"
    bad.write_text("let A = [1/2, 1/2];\nshow A and;\n", encoding="utf-8")
    code, out, err = call("eval", str(bad))
    assert code == EXIT_SCRIPT and out == ""
    assert f"{bad}:2:11:" in err


def test_eval_missing_file(tmp_path):
    code, _, err = call("eval", str(tmp_path / "nope.ctx"))
    assert code == EXIT_USAGE and "cannot read" in err


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["audit", "nonsense"], ["enumerate", "--rows", "2"]])
def test_usage_errors(argv):
    code, _, err = call(*argv)
    assert code == EXIT_USAGE and err


@pytest.mark.parametrize("claim, code", [
    ("theorem2", EXIT_REFUTED), ("closure", EXIT_OK), ("isometry", EXIT_OK), ("nearest", EXIT_REFUTED),
])
def test_audit_exit_codes_and_json(claim, code):
    c1, out1, _ = call("audit", claim, "--json")
    c2, out2, _ = call("audit", claim, "--json")
    assert c1 == c2 == code
    assert out1 == out2
    report = AuditReport.from_json(json.loads(out1))
    assert json.dumps(report.to_json(), indent=2) + "\n" == out1
    assert (report.verdict is Verdict.REFUTED) == (code == EXIT_REFUTED)


def test_audit_classify_seeded():
    _, a, _ = call("audit", "classify", "--sample", "4", "--seed", "5", "--json")
    _, b, _ = call("audit", "classify", "--sample", "4", "--seed", "5", "--json")
    assert a == b
    assert json.loads(a)["stats"]["sample_size"] == 4


def test_human_summary():
    code, out, _ = call("audit", "isometry")
    assert out.startswith("isometry: CONFIRMED_WITH_ERRATUM")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ctxlogic", "enumerate", "--rows", "2", "--cols", "4", "--limit", "2"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.splitlines()[0].startswith("2x4 [1, 1, 1, 1]")
