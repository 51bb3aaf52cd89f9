import json
import subprocess
import sys

from liecenter import cli, liealg


def run_cli(capsys, *args):
    code = cli.main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerifyExitCodes:
    def test_passing_run(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--algebra", "g2-borel", "--char", "0",
            "--suites", "invariance,weights",
        )
        assert code == 0
        assert "[PASS] invariance" in out and "[PASS] weights" in out

    def test_char_two_rejected(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--algebra", "f4-nil", "--char", "2")
        assert code == 2
        assert "odd prime" in err

    def test_excluded_characteristic(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--algebra", "g2-nil", "--char", "3")
        assert code == 2
        assert "excluded" in err

    def test_unknown_algebra(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--algebra", "e8-borel")
        assert code == 2

    def test_cn_needs_n(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--algebra", "cn-borel")
        assert code == 2
        assert "--n" in err

    def test_unknown_suite(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--algebra", "g2-borel", "--suites", "nonsense"
        )
        assert code == 2

    def test_inapplicable_suite(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--algebra", "g2-nil", "--suites", "weights"
        )
        assert code == 2
        assert "weights" in err

    def test_frobenius_needs_prime(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--algebra", "g2-nil", "--char", "0", "--suites", "frobenius"
        )
        assert code == 2

    def test_cn_audit_char3(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--algebra", "cn-borel", "--n", "2", "--char", "3",
            "--suites", "audit",
        )
        assert code == 0
        assert "[PASS] audit" in out

    def test_cn_default_suites(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--algebra", "cn-borel", "--n", "2", "--char", "3"
        )
        assert code == 0
        for suite in ("jacobi", "invariance", "weights", "frobenius", "pbw", "oracle", "audit"):
            assert f"[PASS] {suite}" in out

    def test_corrupted_table_fails(self, capsys, tmp_path, g2b):
        bad = liealg.with_bracket(g2b, "x1", "x3", "-3*x5")
        path = tmp_path / "bad.json"
        liealg.save_table(bad, str(path))
        code, out, _ = run_cli(
            capsys, "verify", "--algebra", str(path),
            "--suites", "jacobi,invariance,triangle",
        )
        assert code == 1
        assert "FAILED" in out

    def test_flipped_x1x2_caught_by_invariance(self, capsys, tmp_path, g2b):
        # this particular flip leaves every Jacobi triple intact
        bad = liealg.with_bracket(g2b, "x1", "x2", "-2*x3")
        path = tmp_path / "bad.json"
        liealg.save_table(bad, str(path))
        code, out, _ = run_cli(
            capsys, "verify", "--algebra", str(path),
            "--suites", "jacobi,invariance,triangle",
        )
        assert code == 1
        assert "[PASS] jacobi" in out
        assert "[FAIL] invariance" in out


class TestDeterminism:
    def test_json_byte_identical(self, capsys):
        args = ("verify", "--algebra", "g2-borel", "--char", "5",
                "--suites", "jacobi,invariance,weights", "--format", "json")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2
        json.loads(out1)

    def test_jobs_do_not_change_output(self, capsys):
        base = ("verify", "--algebra", "g2-nil", "--char", "5",
                "--suites", "jacobi,invariance,triangle,frobenius", "--format", "json")
        _, seq, _ = run_cli(capsys, *base, "--jobs", "1")
        _, par, _ = run_cli(capsys, *base, "--jobs", "4")
        assert seq == par


class TestReports:
    def test_round_trip(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        code, _, _ = run_cli(
            capsys, "verify", "--algebra", "g2-borel", "--char", "0",
            "--suites", "invariance,weights", "--format", "json", "--out", str(out_path),
        )
        assert code == 0
        original = out_path.read_text()
        code, out, _ = run_cli(capsys, "report", "--in", str(out_path), "--format", "json")
        assert code == 0
        assert out == original

    def test_markdown_rendering(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        run_cli(
            capsys, "verify", "--algebra", "g2-borel", "--char", "0",
            "--suites", "weights", "--format", "json", "--out", str(out_path),
        )
        code, out, _ = run_cli(capsys, "report", "--in", str(out_path), "--format", "markdown")
        assert code == 0
        assert "## Suite `weights`" in out
        assert "derived-with-note" in out

    def test_config_echo_and_sha(self, capsys, tmp_path):
        corrections = tmp_path / "over.json"
        corrections.write_text(json.dumps({"entries": [
            {"lhs": "x1", "rhs": "x2", "value": "2*x3"}]}))
        code, out, _ = run_cli(
            capsys, "verify", "--algebra", "g2-borel", "--char", "0",
            "--suites", "jacobi", "--format", "json", "--corrections", str(corrections),
        )
        assert code == 0
        data = json.loads(out)
        assert data["config"]["algebra"] == "g2-borel"
        assert data["corrections_sha256"] and len(data["corrections_sha256"]) == 64

    def test_malformed_corrections(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, err = run_cli(
            capsys, "verify", "--algebra", "g2-borel", "--corrections", str(bad)
        )
        assert code == 2

    def test_missing_report_file(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "report", "--in", str(tmp_path / "nope.json"))
        assert code == 2


class TestInvariantsCommand:
    def test_g2_listing(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--algebra", "g2-nil", "--char", "0")
        assert code == 0
        assert "c1 (degree 1) = x6" in out
        assert "c2 (degree 2) = 3*x1*x6 - 3*x2*x5 + x3^2" in out

    def test_cn_listing(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--algebra", "cn-borel", "--n", "3")
        assert code == 0
        for i, d in ((1, 1), (2, 2), (3, 3)):
            assert f"c{i} (degree {d})" in out

    def test_oracle_dims(self, capsys):
        code, out, _ = run_cli(
            capsys, "invariants", "--algebra", "f4-nil", "--max-degree", "2", "--oracle"
        )
        assert code == 0
        assert "degree 1: invariant dimension 1" in out
        assert "degree 2: invariant dimension 2" in out


class TestConsoleScript:
    def test_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "liecenter.cli", "verify", "--algebra", "g2-nil",
             "--char", "0", "--suites", "jacobi"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert "[PASS] jacobi" in proc.stdout
