"""Chain counting and the printed closed form."""

import json
from math import comb

import pytest

from rbtrees.checks import ChainProductCheck, chain_product_report
from rbtrees.config import CheckConfig, ChainProductConfig, IdentityMode
from rbtrees.core import generic_identity
from rbtrees.core.builder import CheckFactory
from rbtrees.errors import CapExceededError
from rbtrees.models import (
    ChainSet,
    chain_count,
    chain_count_formula_report,
    chain_count_prefix,
    chain_product_check,
    chain_product_sides,
)
from rbtrees.models.counting import multiset_count, printed_closed_form, vandermonde_sum
from rbtrees.terms import Combination, Tree


class TestChainCount:
    def test_small_values(self):
        assert [chain_count(1, m) for m in range(1, 6)] == [1, 2, 3, 4, 5]
        assert chain_count(2, 2) == 3
        assert chain_count(2, 3) == 6

    def test_chains_are_weakly_increasing(self):
        chains = list(ChainSet(2, 2))
        assert chains == [(1, 1), (1, 2), (2, 2)]

    def test_enumeration_matches_prefix_sums(self):
        for a in range(1, 9):
            for m in range(1, 9):
                assert chain_count(a, m) == chain_count_prefix(a, m) == multiset_count(a, m)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            chain_count(3, 10, cap=5)

    def test_rejects_non_positive(self):
        with pytest.raises(ValueError):
            ChainSet(0, 3)
        with pytest.raises(ValueError):
            chain_count(2, 0)


class TestFormulas:
    def test_printed_closed_form(self):
        assert printed_closed_form(2, 2) == 5
        assert printed_closed_form(1, 4) == 4

    def test_vandermonde_sum(self):
        assert vandermonde_sum(2, 2) == 5
        for a in range(1, 6):
            for m in range(1, 6):
                assert vandermonde_sum(a, m) == comb(a + m, m) - 1


class TestReport:
    @pytest.fixture(scope="class")
    def report(self):
        return chain_count_formula_report(8, 8)

    def test_rows_cover_grid(self, report):
        assert len(report.rows) == 64
        assert report.operator_consistent

    def test_known_rows(self, report):
        rows = {(row.a, row.m): row for row in report.rows}
        assert rows[1, 1].printed_agrees
        assert rows[1, 2].printed_agrees
        assert rows[2, 2].enumerated == 3
        assert rows[2, 2].printed_closed_form == 5
        assert not rows[2, 2].printed_agrees

    def test_disagreements_start_at_a_two(self, report):
        assert report.disagreements
        assert all(row.a >= 2 for row in report.disagreements)

    def test_big_counts_serialize_as_strings(self, report):
        payload = json.loads(report.model_dump_json())
        row = payload["rows"][-1]
        assert row["enumerated"] == str(comb(15, 8))
        assert row["operator_agrees"] is True


class TestChainProduct:
    def test_normal_form_identity_counts_chains(self, shared_engine):
        for a in range(1, 5):
            for b in range(1, 5):
                rhs = shared_engine.normal_form(Tree(a, b, 0))
                for m in range(1, 7):
                    assert chain_product_check(a, b, m, rhs)

    def test_published_identity_miscounts(self):
        rhs = generic_identity(2, 2, 0, IdentityMode.AS_PUBLISHED)
        lhs, total = chain_product_sides(2, 2, 1, rhs)
        assert lhs == 1
        assert total != lhs
        assert not chain_product_check(2, 2, 1, rhs)

    def test_requires_normal_trees(self):
        with pytest.raises(ValueError):
            chain_product_sides(1, 1, 2, Combination.single(Tree(1, 1, 0)))


class TestChainProductCheck:
    def test_reconciled_identity_counts_chains(self, shared_engine):
        config = ChainProductConfig(max_a=3, max_b=3, max_m=4, source="reconciled")
        report = chain_product_report(shared_engine, config)
        assert report.checked == 3 * 3 * 4
        assert report.failures == []

    def test_published_identity_fails_at_two_two(self, shared_engine):
        config = ChainProductConfig(max_a=3, max_b=3, max_m=3, source="as-published")
        report = chain_product_report(shared_engine, config)
        cells = [(f.a, f.b, f.m) for f in report.failures]
        assert (2, 2, 1) in cells
        first = report.failures[0]
        assert first.lhs != first.rhs

    async def test_runs_from_a_check_config(self, engine):
        config = CheckConfig(
            type="chain_product", config={"max_a": 2, "max_b": 2, "max_m": 3}
        )
        check = CheckFactory(engine).create_check(config.type, config.parsed_config())
        assert isinstance(check, ChainProductCheck)
        result = await check.run()
        assert result.passed
        assert result.summary == {"checked": 12, "failures": []}
        assert result.report["source"] == "normal-form"
