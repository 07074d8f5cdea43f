"""
Tests for the series-engine command line.
Run: pytest tests/ -v
"""

from __future__ import annotations

import json

import pytest

from app.main import EXIT_DIFF, EXIT_OK, EXIT_USAGE, build_parser, main


class TestDecompose:
    """series-engine decompose"""

    def test_exterior_square(self, capsys):
        assert main(["decompose", "F4", "0,0,0,1", "--ext", "2"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("Λ^2 F4 [0,0,0,1] = ")
        assert "(dim 325)" in out

    def test_tensor_records(self, capsys):
        assert main(["decompose", "A1", "1", "--tensor", "A1", "1", "--format", "records"]) == EXIT_OK
        rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        assert [(r["weight"], r["dim"]) for r in rows] == [("[2]", 3), ("[0]", 1)]
        assert rows[0]["casimir_killing"] == "1"
        assert rows[0]["casimir_highest_root"] == "4"

    def test_irreducible(self, capsys):
        assert main(["decompose", "E7", "omega7"]) == EXIT_OK
        assert "(dim 56)" in capsys.readouterr().out

    def test_schur(self, capsys):
        assert main(["decompose", "A2", "1,0", "--schur", "21"]) == EXIT_OK
        assert "[1,1](8)" in capsys.readouterr().out

    def test_mismatched_tensor_algebra(self, capsys):
        assert main(["decompose", "A2", "1,0", "--tensor", "B2", "1,0"]) == EXIT_USAGE
        assert "series-engine decompose:" in capsys.readouterr().err

    @pytest.mark.parametrize(
        "argv",
        [
            ["decompose", "E9", "1"],
            ["decompose", "A2", "1,-1"],
            ["decompose", "A2", "omega4"],
        ],
    )
    def test_usage_errors(self, argv):
        assert main(argv) == EXIT_USAGE

    def test_budget(self, capsys):
        assert main(["decompose", "E8", "adjoint", "--sym", "3", "--budget", "1000"]) == EXIT_DIFF
        assert "BudgetExceededError" in capsys.readouterr().err

    def test_exclusive_powers(self):
        with pytest.raises(SystemExit) as exc:
            build_parser().parse_args(["decompose", "A2", "1,0", "--sym", "2", "--ext", "2"])
        assert exc.value.code == 2


class TestInduce:
    """series-engine induce"""

    def test_quadric(self, capsys):
        assert main(["induce", "E7", "adjoint"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "[0,0,0,0,0,1,0]" in out
        assert "D5, dim Q = 8" in out

    def test_aad_full_chain(self, capsys):
        assert main(["induce", "E6", "omega1", "omega6", "--aad", "full-chain", "--format", "records"]) == EXIT_OK
        (row,) = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        assert row["induced"] == "[0,1,0,0,0,0]"
        assert row["subdiagram"] == "[1, 3, 4, 5, 6]"
        assert row["verified"] is True

    def test_aad_explicit_chain(self, capsys):
        assert main(["induce", "E6", "omega1", "omega6", "--aad", "1,3,4,5,6"]) == EXIT_OK

    @pytest.mark.parametrize("chain", ["0", "1,3,4,5,9"])
    def test_aad_chain_outside_the_diagram(self, chain, capsys):
        assert main(["induce", "E6", "omega6", "omega6", "--aad", chain]) == EXIT_USAGE
        assert "outside 1..6" in capsys.readouterr().err

    def test_achain(self, capsys):
        assert main(["induce", "A7", "omega4", "--achain", "ext"]) == EXIT_OK
        assert "[0,0,1,0,1,0,0]" in capsys.readouterr().out

    def test_second_weight_needs_aad(self):
        assert main(["induce", "E6", "omega1", "omega6"]) == EXIT_USAGE


class TestInfo:
    """series-engine info"""

    def test_e8(self, capsys):
        assert main(["info", "E8", "--format", "records"]) == EXIT_OK
        info = json.loads(capsys.readouterr().out)
        assert info["positive_roots"] == 120
        assert info["dual_coxeter"] == [30]
        assert info["weyl_group_order"] == 696729600
        assert 248 in info["fundamental_dims"]


class TestVerify:
    """series-engine verify"""

    def test_battery_with_output(self, capsys, tmp_path):
        report = tmp_path / "reports" / "vogel.jsonl"
        assert main(["verify", "--identity", "vogel-dim", "--output", str(report)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "records: match" in out
        lines = report.read_text(encoding="utf-8").splitlines()
        assert lines and all(json.loads(line)["status"] == "match" for line in lines)

    def test_tabled_identity(self, capsys):
        argv = ["verify", "--series", "exceptional", "--m", "1", "--identity", "vogel-sym2-g", "--format", "records"]
        assert main(argv) == EXIT_OK
        (record,) = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        assert record["id"] == "exceptional/m=1/vogel-sym2-g"

    @pytest.mark.parametrize(
        "argv",
        [
            ["verify"],
            ["verify", "--identity", "no-such-check"],
            ["verify", "--identity", "vogel-dim", "--all-identities"],
            ["verify", "--series", "exceptional", "--m", "1", "--all-rows"],
        ],
    )
    def test_bad_selection(self, argv):
        assert main(argv) == EXIT_USAGE
