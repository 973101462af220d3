"""Command-line interface: formats, exit codes, determinism."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from genusgaps import cases as case_mod
from genusgaps import cli
from genusgaps.cases import CheckResult, VerificationReport


def run(capsys, *argv: str) -> tuple[int, str, str]:
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def run_proc(*argv: str, env: dict | None = None) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "genusgaps", *argv],
        capture_output=True,
        text=True,
        env=env,
    )


class TestStatus:
    def test_proved_gap(self, capsys):
        rc, out, _ = run(capsys, "status", "5", "1")
        assert rc == 0
        assert "ProvedGap" in out and "Xu-initial" in out

    def test_certified(self, capsys):
        rc, out, _ = run(capsys, "status", "6", "100")
        assert rc == 0
        assert "CertifiedNonGap" in out and "nodes" in out

    def test_unknown(self, capsys):
        rc, out, _ = run(capsys, "status", "6", "26")
        assert rc == 0
        assert "Unknown" in out

    def test_json(self, capsys):
        rc, out, _ = run(capsys, "status", "6", "13", "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert payload == {
            "schema_version": "1",
            "command": "status",
            "d": 6,
            "g": 13,
            "verdict": "ProvedGap",
            "source": "MainTheorem-Gaps1",
            "certificate": None,
        }

    def test_csv(self, capsys):
        rc, out, _ = run(capsys, "status", "6", "8", "--format", "csv")
        assert rc == 0
        lines = out.strip().splitlines()
        assert lines[0] == "d,g,verdict,source,n,delta"
        assert lines[1] == "6,8,CertifiedNonGap,SeveriInterval,1,2"

    def test_bad_arguments(self, capsys):
        assert run(capsys, "status", "0", "5")[0] == 2
        assert run(capsys, "status", "6", "-1")[0] == 2
        assert run(capsys, "status", "six", "1")[0] == 2


class TestCertify:
    def test_found(self, capsys):
        rc, out, _ = run(capsys, "certify", "6", "8", "--format", "csv")
        assert rc == 0
        assert out.strip().splitlines()[1] == "6,8,1,2"

    def test_absent(self, capsys):
        rc, out, _ = run(capsys, "certify", "6", "26", "--format", "json")
        assert rc == 0
        assert json.loads(out)["certificate"] is None

    def test_low_degree_rejected(self, capsys):
        rc, _, err = run(capsys, "certify", "3", "0")
        assert rc == 2
        assert "degree" in err


class TestDecompose:
    def test_json_payload(self, capsys):
        rc, out, _ = run(capsys, "decompose", "6", "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert payload["proved"] == [[0, 6], [11, 15]]
        assert payload["unknown"] == [[26, 26]]
        assert payload["certified"] == [[7, 10], [16, 25]]
        assert payload["horizon"] == 26
        assert payload["sources"] == [
            {"lo": 0, "hi": 6, "source": "Xu-initial"},
            {"lo": 11, "hi": 15, "source": "MainTheorem-Gaps1"},
        ]

    def test_degree_four_empty(self, capsys):
        rc, out, _ = run(capsys, "decompose", "4", "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert payload["proved"] == [] and payload["unknown"] == []

    def test_degree_nine_second_range(self, capsys):
        rc, out, _ = run(capsys, "decompose", "9", "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert [29, 54] in payload["proved"]

    def test_low_degree_exits_two(self, capsys):
        rc, out, err = run(capsys, "decompose", "3")
        assert rc == 2
        assert out == ""
        assert "every genus" in err

    def test_json_round_trip(self, capsys):
        for args in (["decompose", "6"], ["status", "6", "26"], ["bounds", "7"],
                     ["table", "4", "6"], ["certify", "5", "9"]):
            rc, out, _ = run(capsys, *args, "--format", "json")
            assert rc == 0
            payload = json.loads(out)
            assert json.dumps(payload, sort_keys=True, indent=2) == out.strip()


class TestBounds:
    def test_documented_values(self, capsys):
        rc, out, _ = run(capsys, "bounds", "5", "--format", "csv")
        assert rc == 0
        assert out.strip().splitlines()[1] == "5,19,2"

    def test_degree_four_degenerate(self, capsys):
        rc, out, _ = run(capsys, "bounds", "4", "--format", "csv")
        assert rc == 0
        assert out.strip().splitlines()[1] == "4,-1,-1"


class TestTable:
    def test_csv_sorted(self, capsys):
        rc, out, _ = run(capsys, "table", "4", "8", "--format", "csv")
        assert rc == 0
        lines = out.strip().splitlines()
        assert lines[0] == "d,kind,lo,hi,source"
        rows = [line.split(",") for line in lines[1:]]
        keys = [(int(r[0]), int(r[2]) if r[2] else -1) for r in rows]
        assert keys == sorted(keys)
        assert {r[0] for r in rows} == {"4", "5", "6", "7", "8"}

    def test_bad_range(self, capsys):
        assert run(capsys, "table", "9", "4")[0] == 2
        assert run(capsys, "table", "3", "8")[0] == 2

    def test_streams_every_degree(self, capsys):
        rc, out, _ = run(capsys, "table", "4", "8", "--format", "json")
        payload = json.loads(out)
        assert [row["d"] for row in payload["rows"]] == [4, 5, 6, 7, 8]


class TestVerify:
    def test_cases_pass(self, capsys):
        rc, out, _ = run(capsys, "verify", "cases")
        assert rc == 0
        assert "all 120 checks passed" in out

    def test_json_shape(self, capsys):
        rc, out, _ = run(capsys, "verify", "cases", "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert payload["ok"] is True
        assert payload["scope"] == "cases"
        assert len(payload["checks"]) == 120

    def test_all_scope(self, capsys):
        rc, out, _ = run(capsys, "verify", "all", "--format", "json")
        assert rc == 0
        assert json.loads(out)["ok"] is True

    def test_failure_exits_one(self, capsys, monkeypatch):
        def broken():
            return VerificationReport(
                ok=False,
                checks=(CheckResult(check_id="eliminate/x/y", ok=False, detail="boom"),),
            )

        monkeypatch.setattr(case_mod, "verify_elimination", broken)
        rc, out, _ = run(capsys, "verify", "cases")
        assert rc == 1
        assert "FAIL" in out


class TestUsage:
    def test_no_arguments(self, capsys):
        assert cli.main([]) == 2

    def test_unknown_command(self, capsys):
        assert cli.main(["frobnicate"]) == 2

    def test_bad_format(self, capsys):
        assert cli.main(["status", "5", "1", "--format", "yaml"]) == 2

    def test_help_exits_zero(self, capsys):
        assert cli.main(["--help"]) == 0


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["decompose", "12", "--format", "json"],
            ["table", "4", "9", "--format", "csv"],
            ["verify", "cases", "--format", "csv"],
        ],
    )
    def test_byte_identical_runs(self, argv):
        first = run_proc(*argv)
        second = run_proc(*argv)
        assert first.returncode == second.returncode == 0
        assert first.stdout == second.stdout

    def test_no_color_is_a_no_op(self):
        import os

        env = dict(os.environ)
        base = run_proc("decompose", "6", env=env)
        env["NO_COLOR"] = "1"
        colored = run_proc("decompose", "6", env=env)
        assert base.stdout == colored.stdout
