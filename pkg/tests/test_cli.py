import io
import json
import subprocess
import sys

from quartic15.cli import run


def run_quiet(argv):
    out = io.StringIO()
    code, report = run(argv, out=out)
    return code, report, out.getvalue()


def test_code_subcommand_prints_enumerator():
    code, report, text = run_quiet(["code"])
    assert code == 0
    assert "dimension 5" in text or "dimension: 5" in text
    assert report.checks[0]["status"] == "pass"


def test_cardinal_section_fails_genericity_named():
    code, report, text = run_quiet(["section", "--coeffs", "1,1,1,-1,-1,-1"])
    assert code == 1
    assert report.checks[0]["status"] == "fail"
    assert "cardinal" in report.checks[0]["details"]


def test_section_reference_checks_pass_without_scan():
    code, report, _ = run_quiet(["section", "--coeffs", "1,2,3,5,7,11"])
    assert code == 0
    assert all(c["status"] == "pass" for c in report.checks)


def test_section_scan_good_prime():
    code, report, _ = run_quiet(["section", "--coeffs", "0,1,3,14,15,17", "--scan-prime", "11"])
    assert code == 0


def test_usage_error_exit_code():
    code, _, _ = run_quiet(["no-such-command"])
    assert code == 2
    code, _, _ = run_quiet(["section", "--coeffs", "1,2,3"])
    assert code == 2


def test_json_report_determinism(tmp_path):
    path = tmp_path / "report.json"
    argv = ["--seed", "3", "--no-timing", "--json", str(path), "duality", "--samples", "5"]
    code, _, _ = run_quiet(argv)
    assert code == 0
    first = path.read_bytes()
    code, _, _ = run_quiet(argv)
    assert code == 0
    assert path.read_bytes() == first
    data = json.loads(path.read_text())
    assert data["seed"] == 3
    assert all(c["elapsed_ms"] == 0 for c in data["checks"])
    assert all(c["status"] == "pass" for c in data["checks"])


def test_report_schema_fields():
    code, report, _ = run_quiet(["congruence", "--bidegree", "2,3", "--rank", "1"])
    assert code == 0
    entry = report.checks[0]
    assert set(entry) == {"id", "claim", "status", "details", "elapsed_ms"}
    assert report.tool_version


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-c", "import sys; sys.argv = ['quartic15', 'table1', '--n', '3']; from quartic15.cli import main; main()"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "table1[3]" in proc.stdout
