"""
Command-Line Tests

Module: tests.test_tools.test_cli
Purpose: Verb dispatch, output formats and exit codes of the brauerchar CLI
Status: Complete
Created: 2026-10-17
"""

import json

import pytest

from src.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, build_parser, run


class TestAcceptanceRuns:
    """Test documented command lines"""

    @pytest.mark.acceptance
    def test_chmap_json(self, capsys):
        """Test chmap --lambda 2,2 --group orthogonal --N 6 --json"""
        code = run(["chmap", "--lambda", "2,2", "--group", "orthogonal", "--N", "6", "--json"])
        payload = json.loads(capsys.readouterr().out)
        assert code == EXIT_OK
        assert {t["coeff"] for t in payload["terms"]} == {"1/1680", "1/360"}

    @pytest.mark.acceptance
    def test_dims(self, capsys):
        """Test dims --group sp --N 4 --lambda 1,1 prints 5"""
        assert run(["dims", "--group", "sp", "--N", "4", "--lambda", "1,1"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "5"

    @pytest.mark.acceptance
    def test_basis_count(self, capsys):
        """Test basis --m 5 --count prints 945"""
        assert run(["basis", "--m", "5", "--count"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "945"

    def test_json_flag_before_verb(self, capsys):
        """Test global flags are accepted before the verb"""
        assert run(["--json", "basis", "--m", "3"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out) == {"m": 3, "count": 15}


class TestExitCodes:
    """Test 0 / 1 / 2"""

    def test_usage_error(self, capsys):
        """Test a missing required flag"""
        assert run(["chmap", "--lambda", "2"]) == EXIT_USAGE
        assert "usage" in capsys.readouterr().err

    def test_unknown_verb(self, capsys):
        """Test a verb that does not exist"""
        assert run(["plot"]) == EXIT_USAGE

    def test_help(self, capsys):
        """Test --help exits cleanly"""
        assert run(["--help"]) == EXIT_OK
        assert "chmap" in capsys.readouterr().out

    def test_tool_error(self, capsys):
        """Test an odd symplectic N"""
        assert run(["dims", "--group", "sp", "--N", "5", "--lambda", "1"]) == EXIT_FAILURE
        captured = capsys.readouterr()
        lines = captured.err.strip().splitlines()
        assert len(lines) == 1
        assert lines[0].startswith("error:") and "even" in lines[0]
        assert captured.out == ""

    def test_tool_error_logged_at_debug(self, capsys):
        """Test the failure record appears only with --log-level DEBUG"""
        assert run(["--log-level", "DEBUG", "basis", "--m", "0"]) == EXIT_FAILURE
        err = capsys.readouterr().err
        assert "DEBUG" in err and "basis failed" in err
        assert err.strip().splitlines()[-1].startswith("error:")
        run(["--log-level", "WARNING", "basis", "--m", "1"])
        capsys.readouterr()

    def test_verify_passes(self, capsys):
        """Test verify exits 0 when every check passes"""
        assert run(["verify", "--suite", "symfunc"]) == EXIT_OK
        assert "0 failed" in capsys.readouterr().out


class TestOptions:
    """Test flag plumbing"""

    def test_output_file(self, tmp_path, capsys):
        """Test --output writes the JSON document"""
        target = tmp_path / "dims.json"
        assert run(["dims", "--group", "o", "--N", "6", "--lambda", "2", "--output", str(target)]) == EXIT_OK
        assert json.loads(target.read_text(encoding="utf-8"))["value"] == "20"

    def test_no_prune(self, capsys):
        """Test --no-prune gives the same image"""
        run(["chmap", "--group", "sp", "--N", "6", "--lambda", "2", "--json"])
        pruned = json.loads(capsys.readouterr().out)
        run(["chmap", "--group", "sp", "--N", "6", "--lambda", "2", "--no-prune", "--json"])
        assert json.loads(capsys.readouterr().out) == pruned
        assert pruned["terms"] == [{"nu": [1], "coeff": "-1/42"}]

    def test_size_guard_flags(self, capsys):
        """Test --max-dimension and --force-large reach the builder"""
        argv = ["idempotent", "--group", "o", "--N", "4", "--lambda", "2", "--max-dimension", "8"]
        assert run(argv) == EXIT_FAILURE
        capsys.readouterr()
        assert run(argv + ["--force-large", "--json"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["trace"] == "9"

    def test_parser_destinations(self):
        """Test --lambda and --no-prune land on the tool's keys"""
        args = build_parser().parse_args(["chmap", "--group", "o", "--N", "6", "--lambda", "2", "--no-prune"])
        assert getattr(args, "lambda") == "2"
        assert args.prune is False
