"""Rewrite engine: single moves, memoized and naive normal forms."""

import time
from math import comb

import pytest

from rbtrees.cli.render import combination_json
from rbtrees.core import (
    NormalFormEngine,
    coefficient_sum,
    delannoy,
    expand_step,
    generic_identity,
    neck_shift,
)
from rbtrees.errors import CapExceededError, NoApplicableMoveError
from rbtrees.terms import LAMBDA, ONE, Combination, LambdaPoly, Tree

# P^2(x)P(y) = P^2(xP(y)) + P^2(P(x)y) + λP^2(xy) + P(P^2(x)y) + λP(P(x)y)
WORKED_EXAMPLE = Combination(
    {
        Tree(0, 1, 2): ONE,
        Tree(1, 0, 2): ONE,
        Tree(0, 0, 2): LAMBDA,
        Tree(2, 0, 1): ONE,
        Tree(1, 0, 1): LAMBDA,
    }
)

WORKED_EXAMPLE_JSON = (
    '[{"tree":[0,0,2],"coeff":[[1,"1"]]},'
    '{"tree":[0,1,2],"coeff":[[0,"1"]]},'
    '{"tree":[1,0,1],"coeff":[[1,"1"]]},'
    '{"tree":[1,0,2],"coeff":[[0,"1"]]},'
    '{"tree":[2,0,1],"coeff":[[0,"1"]]}]'
)


class TestExpandStep:
    def test_defining_identity(self):
        assert expand_step(Tree(1, 1, 0)) == Combination(
            {Tree(0, 1, 1): ONE, Tree(1, 0, 1): ONE, Tree(0, 0, 1): LAMBDA}
        )

    def test_keeps_neck(self):
        assert expand_step(Tree(3, 2, 5)) == Combination(
            {Tree(2, 2, 6): ONE, Tree(3, 1, 6): ONE, Tree(2, 1, 6): LAMBDA}
        )

    def test_normal_form_has_no_move(self):
        with pytest.raises(NoApplicableMoveError):
            expand_step(Tree(0, 2, 1))

    def test_neck_shift(self):
        u = Combination({Tree(0, 1, 1): ONE})
        assert neck_shift(u, 3) == Combination({Tree(0, 1, 4): ONE})


class TestNormalForm:
    def test_worked_example(self, engine):
        start = time.perf_counter()
        result = engine.normal_form(Tree(2, 1, 0))
        elapsed = time.perf_counter() - start
        assert result == WORKED_EXAMPLE
        assert combination_json(result) == WORKED_EXAMPLE_JSON
        assert elapsed < 0.01

    def test_normal_tree_is_fixed(self, engine):
        assert engine.normal_form(Tree(0, 3, 1)) == Combination.single(Tree(0, 3, 1))
        assert engine.normal_form_naive(Tree(0, 3, 1)) == Combination.single(Tree(0, 3, 1))

    def test_result_is_normal(self, engine):
        assert engine.normal_form(Tree(4, 3, 2)).is_normal()

    def test_neck_commutes_with_normalization(self, engine):
        base = engine.normal_form(Tree(3, 2, 0))
        assert engine.normal_form(Tree(3, 2, 4)) == base.neck_shift(4)

    def test_leg_symmetry(self, engine):
        assert engine.normal_form(Tree(2, 5, 0)).swapped_legs() == engine.normal_form(
            Tree(5, 2, 0)
        )

    def test_path_polynomial(self, engine):
        assert engine.path_polynomial(0, 0) == ONE
        assert engine.path_polynomial(1, 1) == LambdaPoly({0: 2, 1: 1})
        assert engine.path_polynomial(-1, 0) == LambdaPoly()

    def test_matches_naive_oracle(self, shared_engine):
        for a in range(1, 8):
            for b in range(1, 8):
                for c in range(3):
                    tree = Tree(a, b, c)
                    assert shared_engine.normal_form(tree) == shared_engine.normal_form_naive(
                        tree
                    ), tree

    def test_coefficient_sums(self, shared_engine):
        for a in range(1, 11):
            for b in range(1, 11):
                result = shared_engine.normal_form(Tree(a, b, 0))
                assert coefficient_sum(result, 0) == comb(a + b, a)
                assert coefficient_sum(result, 1) == delannoy(a, b)

    def test_coefficient_sums_on_naive_oracle(self, engine):
        for a in range(1, 6):
            for b in range(1, 6):
                result = engine.normal_form_naive(Tree(a, b, 0))
                assert coefficient_sum(result, 0) == comb(a + b, a)
                assert coefficient_sum(result, 1) == delannoy(a, b)

    def test_diagonal_hundred_matches_closed_form(self):
        start = time.perf_counter()
        memoized = NormalFormEngine().normal_form(Tree(100, 100, 0))
        closed = generic_identity(100, 100, 0)
        assert time.perf_counter() - start < 5
        assert memoized == closed


class TestInvariants:
    def test_degree_is_conserved(self, shared_engine):
        for a in range(1, 9):
            for b in range(1, 9):
                for c in range(3):
                    for tree, coeff in shared_engine.normal_form(Tree(a, b, c)).items():
                        for exponent, _ in coeff:
                            assert tree.degree + exponent == a + b + c, (a, b, c, tree)

    def test_swapping_legs_is_a_bijection(self, shared_engine):
        for a in range(1, 9):
            for b in range(1, 9):
                left = shared_engine.normal_form(Tree(a, b, 0))
                right = shared_engine.normal_form(Tree(b, a, 0))
                assert left.swapped_legs() == right, (a, b)
                assert len(left) == len(right)

    def test_neck_is_inert(self, shared_engine):
        for a in range(1, 9):
            for b in range(1, 9):
                base = shared_engine.normal_form(Tree(a, b, 0))
                for c in range(1, 5):
                    assert shared_engine.normal_form(Tree(a, b, c)) == neck_shift(base, c)


class TestCaps:
    def test_memo_cap(self):
        with pytest.raises(CapExceededError):
            NormalFormEngine(max_sum=10).normal_form(Tree(6, 5, 0))

    def test_naive_cap(self, engine):
        with pytest.raises(CapExceededError):
            engine.normal_form_naive(Tree(8, 7, 0))

    def test_term_cap(self):
        with pytest.raises(CapExceededError):
            NormalFormEngine(max_terms=3).normal_form(Tree(2, 1, 0))

    def test_cap_error_is_a_value_error(self):
        assert issubclass(CapExceededError, ValueError)


class TestDelannoy:
    def test_small_values(self):
        assert [delannoy(n, n) for n in range(5)] == [1, 3, 13, 63, 321]
        assert delannoy(3, 0) == 1
        assert delannoy(2, 1) == 5
