"""Command-line front end: output bytes and exit codes."""

import json

import pytest

from rbtrees.cli import main
from rbtrees.cli.bench import run_bench
from rbtrees.cli.render import render_table
from rbtrees.config import Settings

from .test_rewrite import WORKED_EXAMPLE_JSON


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExpand:
    def test_json_worked_example(self, capsys):
        code, out, _ = run(capsys, "expand", "--a", "2", "--b", "1", "--format", "json")
        assert code == 0
        assert out == WORKED_EXAMPLE_JSON + "\n"

    def test_common_flags_before_subcommand(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "expand", "--a", "2", "--b", "1")
        assert code == 0
        assert out == WORKED_EXAMPLE_JSON + "\n"

    def test_naive_gives_identical_bytes(self, capsys):
        _, memoized, _ = run(capsys, "expand", "--a", "3", "--b", "3", "--format", "json")
        _, naive, _ = run(capsys, "expand", "--a", "3", "--b", "3", "--format", "json", "--naive")
        assert memoized == naive

    def test_text(self, capsys):
        code, out, _ = run(capsys, "expand", "--a", "1", "--b", "1")
        assert code == 0
        assert out.strip() == "T(1,1,0) = λ T(0,0,1) + T(0,1,1) + T(1,0,1)"

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "nf.json"
        code, out, _ = run(
            capsys, "expand", "--a", "2", "--b", "1", "--format", "json", "--output", str(target)
        )
        assert code == 0
        assert out == ""
        assert target.read_text(encoding="utf-8") == WORKED_EXAMPLE_JSON + "\n"

    def test_term_cap(self, capsys):
        code, _, err = run(capsys, "expand", "--a", "2", "--b", "1", "--max-terms", "2")
        assert code == 3
        assert "error" in err

    def test_negative_exponent(self, capsys):
        code, _, _ = run(capsys, "expand", "--a", "-1", "--b", "1")
        assert code == 2


class TestClosedForm:
    def test_matches_expand(self, capsys):
        _, closed, _ = run(capsys, "closed-form", "--a", "2", "--b", "1", "--format", "json")
        assert closed == WORKED_EXAMPLE_JSON + "\n"

    def test_restricted(self, capsys):
        code, out, _ = run(capsys, "closed-form", "--a", "2", "--b", "1", "--restricted")
        assert code == 0
        assert out.strip() == "T(2,1,0) = T(0,1,2) + T(1,0,2) + T(2,0,1)"

    def test_empty_leg_is_usage_error(self, capsys):
        code, _, err = run(capsys, "closed-form", "--a", "0", "--b", "1")
        assert code == 2
        assert err.startswith("error:")


class TestVerify:
    def test_restricted_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-a", "4", "--max-b", "4", "--restricted")
        assert code == 0
        assert "0 mismatches" in out

    def test_published_has_findings(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--max-a", "4", "--max-b", "4", "--mode", "as-published",
            "--format", "json",
        )
        assert code == 1
        assert json.loads(out)["mismatches"]

    def test_jobs_must_be_positive(self, capsys):
        code, _, _ = run(capsys, "--jobs", "0", "verify", "--max-a", "2", "--max-b", "2")
        assert code == 2


class TestModelCheck:
    def test_normal_forms_pass(self, capsys):
        code, _, _ = run(
            capsys, "model-check", "--model", "integral", "--max-a", "3", "--max-b", "3"
        )
        assert code == 0

    def test_published_fails_in_sum_model(self, capsys):
        code, out, _ = run(
            capsys, "model-check", "--model", "sum", "--max-a", "2", "--max-b", "2",
            "--mode", "as-published", "--format", "json", "--seed", "1",
        )
        assert code == 1
        payload = json.loads(out)
        assert payload["seed"] == 1
        assert payload["failures"]


class TestCount:
    def test_report_exits_zero(self, capsys):
        code, out, _ = run(capsys, "count", "--max-a", "3", "--max-m", "3", "--format", "json")
        assert code == 0
        rows = {(r["a"], r["m"]): r for r in json.loads(out)["rows"]}
        assert rows[2, 2]["enumerated"] == "3"
        assert rows[2, 2]["printed_closed_form"] == "5"

    def test_latex_table(self, capsys):
        code, out, _ = run(capsys, "count", "--max-a", "2", "--max-m", "2", "--format", "latex")
        assert code == 0
        assert out.startswith("\\begin{tabular}")


class TestEmitLatex:
    def test_operator_notation(self, capsys):
        code, out, _ = run(
            capsys, "emit-latex", "--a", "1", "--b", "1", "--operator-notation"
        )
        assert code == 0
        assert out.startswith("\\[")
        assert "\\lambda" in out
        assert "P(xP(y))" in out

    def test_closed_form_source(self, capsys):
        code, out, _ = run(capsys, "emit-latex", "--a", "2", "--b", "1", "--source", "restricted")
        assert code == 0
        assert "\\lambda" not in out


class TestBench:
    def test_small_diagonal(self, capsys):
        code, out, _ = run(capsys, "bench", "--max-ab", "2", "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert [row["a=b"] for row in rows] == [1, 2]
        assert rows[0]["memo_terms"] == rows[0]["naive_terms"] == 3
        assert rows[0]["naive_growth"] is None
        assert rows[1]["naive_growth"] > 0
        assert all(row["agree"] for row in rows)

    def test_rows_past_the_naive_cap_keep_integer_counts(self):
        frame = run_bench(2, 1, Settings(max_naive_sum=2))
        assert str(frame["naive_terms"].dtype) == "Int64"
        assert frame["naive_terms"].iloc[0] == 3
        lines = render_table([], "text", frame=frame).splitlines()
        column = lines[0].split().index("naive_terms")
        assert [line.split()[column] for line in lines[1:]] == ["3", "<NA>"]


class TestSweep:
    @pytest.fixture
    def sweep_file(self, tmp_path):
        path = tmp_path / "mini.json"
        path.write_text(
            json.dumps(
                {
                    "sweep_id": "mini",
                    "name": "mini",
                    "checks": [
                        {"type": "verify", "name": "v", "config": {"max_a": 2, "max_b": 2}},
                        {
                            "type": "chain_count",
                            "name": "c",
                            "config": {"max_a": 2, "max_m": 2},
                            "expect_findings": True,
                        },
                    ],
                }
            ),
            encoding="utf-8",
        )
        return path

    def test_config_file(self, capsys, sweep_file):
        code, out, _ = run(capsys, "sweep", "--config", str(sweep_file), "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] is True
        assert [c["name"] for c in payload["checks"]] == ["v", "c"]

    def test_only(self, capsys, sweep_file):
        code, out, _ = run(
            capsys, "sweep", "--config", str(sweep_file), "--only", "c", "--format", "json"
        )
        assert code == 0
        assert [c["name"] for c in json.loads(out)["checks"]] == ["c"]

    def test_unexpected_findings(self, capsys, tmp_path):
        path = tmp_path / "audit.json"
        check = {"type": "verify", "config": {"max_a": 3, "max_b": 3, "mode": "as-published"}}
        path.write_text(json.dumps({"sweep_id": "audit", "name": "audit", "checks": [check]}))
        code, out, _ = run(capsys, "sweep", "--config", str(path))
        assert code == 1
        assert "FAILED" in out

    def test_missing_sweep(self, capsys):
        code, _, err = run(capsys, "sweep", "--sweep-id", "does-not-exist")
        assert code == 2
        assert "not found" in err


class TestParsing:
    def test_missing_subcommand(self, capsys):
        assert main([]) == 2

    def test_version(self, capsys):
        assert main(["--version"]) == 0
        assert "rbtrees" in capsys.readouterr().out
