"""Prefix-sum model on finite sequences."""

import numpy as np
import pytest

from rbtrees.checks import model_check, rota_baxter_law_check
from rbtrees.config import (
    IdentityMode,
    IdentitySource,
    ModelCheckConfig,
    ModelKind,
    RotaBaxterLawConfig,
)
from rbtrees.core import generic_identity
from rbtrees.errors import HorizonMismatchError
from rbtrees.models import (
    FiniteSequence,
    SumModel,
    check_combination_sum,
    eval_tree_sum,
    prefix_sum,
)
from rbtrees.terms import Tree


class TestFiniteSequence:
    def test_one_indexed(self):
        s = FiniteSequence([4, 5, 6])
        assert s[1] == 4 and s[3] == 6
        with pytest.raises(IndexError):
            s[0]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            FiniteSequence([])

    def test_horizon_mismatch(self):
        with pytest.raises(HorizonMismatchError):
            FiniteSequence.ones(3) + FiniteSequence.ones(4)
        with pytest.raises(HorizonMismatchError):
            FiniteSequence.ones(3) * FiniteSequence.ones(4)

    def test_first_difference(self):
        assert FiniteSequence([1, 2, 3]).first_difference(FiniteSequence([1, 2, 4])) == 3
        assert FiniteSequence([1, 2]).first_difference(FiniteSequence([1, 2])) == 0


class TestPrefixSum:
    def test_examples(self):
        assert prefix_sum(FiniteSequence([1, 1, 1])) == FiniteSequence([1, 2, 3])
        assert prefix_sum(FiniteSequence([1, 2, 3])) == FiniteSequence([1, 3, 6])

    def test_second_power_of_ones(self):
        assert SumModel().power(FiniteSequence.ones(3), 2)[3] == 6


class TestEvalTree:
    def test_t110_on_ones(self):
        ones = FiniteSequence.ones(3)
        assert eval_tree_sum(Tree(1, 1, 0), ones, ones) == FiniteSequence([1, 4, 9])

    def test_horizons_must_match(self):
        with pytest.raises(HorizonMismatchError):
            eval_tree_sum(Tree(1, 1, 0), FiniteSequence.ones(3), FiniteSequence.ones(5))
        with pytest.raises(HorizonMismatchError):
            check_combination_sum(
                Tree(1, 1, 0),
                generic_identity(1, 1, 0),
                FiniteSequence.ones(3),
                FiniteSequence.ones(5),
            )

    def test_defining_identity_on_ones(self):
        ones = FiniteSequence.ones(10)
        assert check_combination_sum(Tree(1, 1, 0), generic_identity(1, 1, 0), ones, ones)

    def test_reconciled_identity_on_random_sequences(self):
        model = SumModel({"horizon": 20})
        rng = np.random.default_rng([11, 2, 3])
        f, g = model.random_element(rng), model.random_element(rng)
        rhs = generic_identity(2, 3, 0, IdentityMode.RECONCILED)
        assert check_combination_sum(Tree(2, 3, 0), rhs, f, g)

    def test_published_identity_fails_at_two_two(self):
        ones = FiniteSequence.ones(10)
        rhs = generic_identity(2, 2, 0, IdentityMode.AS_PUBLISHED)
        assert not check_combination_sum(Tree(2, 2, 0), rhs, ones, ones)
        model = SumModel()
        lhs = model.eval_tree(Tree(2, 2, 0), ones, ones)
        assert lhs.first_difference(model.evaluate(rhs, ones, ones)) == 1


class TestRotaBaxterLaw:
    def test_prefix_sum_has_weight_minus_one(self):
        report = rota_baxter_law_check(
            RotaBaxterLawConfig(model="sum", pairs=200, seed=5, horizon=30)
        )
        assert report.failures == 0
        assert report.weight == "-1"


class TestModelCheck:
    def test_normal_forms(self, shared_engine):
        config = ModelCheckConfig(model=ModelKind.SUM, max_a=5, max_b=5, trials=3, seed=42)
        report = model_check(config, shared_engine)
        assert report.passed
        assert report.cells == 25

    def test_reconciled_closed_form(self, shared_engine):
        config = ModelCheckConfig(
            model="sum", max_a=4, max_b=4, source=IdentitySource.RECONCILED
        )
        assert model_check(config, shared_engine, jobs=2).passed

    def test_published_closed_form_fails(self, shared_engine):
        config = ModelCheckConfig(
            model="sum", max_a=2, max_b=2, trials=1, source=IdentitySource.AS_PUBLISHED
        )
        report = model_check(config, shared_engine)
        assert not report.passed
        assert (2, 2) in {(f.a, f.b) for f in report.failures}

    def test_seed_makes_runs_repeatable(self, shared_engine):
        config = ModelCheckConfig(
            model="sum", max_a=3, max_b=3, trials=2, seed=9, source="as-published"
        )
        first = model_check(config, shared_engine, jobs=1)
        second = model_check(config, shared_engine, jobs=3)
        assert first.model_dump() == second.model_dump()

    def test_negative_seed_rejected(self):
        with pytest.raises(ValueError):
            ModelCheckConfig(model="sum", max_a=1, max_b=1, seed=-1)
