"""Tests for the command-line interface."""

import json

from click.testing import CliRunner

from smirnov.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


class TestEnumerate:
    def test_words_text(self):
        result = run("enumerate", "--mu", "2,1")
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert len(lines) == 8
        assert "121" in lines

    def test_words_filtered(self):
        result = run("enumerate", "--mu", "2,1", "--k", "1", "--l", "0")
        assert result.exit_code == 0
        assert set(result.output.split()) == {"1|12", "12|1"}

    def test_paths_json(self):
        result = run("enumerate", "--mu", "2,1", "--kind", "paths", "--format", "json")
        assert result.exit_code == 0
        rows = [json.loads(line) for line in result.output.strip().splitlines()]
        assert len(rows) == 8
        assert all({"steps", "labels", "drise", "dvalley"} <= set(r) for r in rows)

    def test_k_without_l_rejected(self):
        result = run("enumerate", "--mu", "2,1", "--k", "1")
        assert result.exit_code != 0

    def test_malformed_mu(self):
        result = run("enumerate", "--mu", "2,x")
        assert result.exit_code != 0


class TestStat:
    def test_sminv_text(self):
        result = run("stat", "--word", "231|3212|12", "--stat", "sminv")
        assert result.exit_code == 0
        assert "sminv(231|3212|12) = 8" in result.output
        assert "(1,8) case 1" in result.output

    def test_sdinv_json(self):
        result = run("stat", "--word", "231|3212|12", "--stat", "sdinv", "--json")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["count"] == 10

    def test_bad_word(self):
        result = run("stat", "--word", "11", "--stat", "sminv")
        assert result.exit_code != 0


class TestVerify:
    def test_small_suite_passes(self):
        result = run("verify", "--suite", "equidistribution", "--n-max", "3")
        assert result.exit_code == 0
        assert "[pass]" in result.output
        assert "0 failed" in result.output

    def test_json_report(self):
        result = run("verify", "--suite", "main-theorem", "--n-max", "2", "--json")
        assert result.exit_code == 0
        reports = json.loads(result.output)
        assert reports[0]["suite"] == "main-theorem"
        assert reports[0]["failed"] == 0

    def test_memo_file_round_trip(self, tmp_path):
        memo = str(tmp_path / "memo.json")
        first = run("verify", "--suite", "main-theorem", "--n-max", "3",
                    "--memo-file", memo)
        assert first.exit_code == 0
        second = run("verify", "--suite", "main-theorem", "--n-max", "3",
                     "--memo-file", memo)
        assert second.exit_code == 0


class TestTable:
    def test_hilbert_text(self):
        result = run("table", "--kind", "hilbert", "--n", "3")
        assert result.exit_code == 0
        assert "3+q" in result.output
        assert "trivariate: (1+2q+2q^2+q^3) + (2+3q+q^2)v + v^2 + " \
               "(2+3q+q^2)u + (3+q)uv + u^2" in result.output

    def test_h_coeff_csv(self):
        result = run("table", "--kind", "h-coeff", "--n", "3", "--format", "csv")
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines[0] == "n,k,l,mu,poly"
        assert any('"1,1,1","3+q"' in line for line in lines)

    def test_negative_n_rejected(self):
        result = run("table", "--kind", "hilbert", "--n", "-1")
        assert result.exit_code != 0
