"""Sequence prefix-sum model, weight -1."""

from fractions import Fraction
from itertools import accumulate
from typing import Iterable, List, Tuple

import numpy as np

from rbtrees.errors import HorizonMismatchError
from rbtrees.models.base import RotaBaxterModel
from rbtrees.models.polynomial import Number, format_rational
from rbtrees.terms import Combination, Tree


class FiniteSequence:
    """Values f(1), ..., f(M) of a sequence on a finite window of length M."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[Number]):
        self.values: Tuple[Fraction, ...] = tuple(Fraction(v) for v in values)
        if not self.values:
            raise ValueError("a sequence needs a positive horizon")

    @classmethod
    def constant(cls, value: Number, horizon: int) -> "FiniteSequence":
        if horizon < 1:
            raise ValueError(f"horizon must be positive, got {horizon}")
        return cls([value] * horizon)

    @classmethod
    def ones(cls, horizon: int) -> "FiniteSequence":
        return cls.constant(1, horizon)

    @property
    def horizon(self) -> int:
        return len(self.values)

    def __getitem__(self, m: int) -> Fraction:
        """Value at m, 1-indexed."""
        if not 1 <= m <= self.horizon:
            raise IndexError(f"index {m} outside 1..{self.horizon}")
        return self.values[m - 1]

    def _check_horizon(self, other: "FiniteSequence") -> None:
        if self.horizon != other.horizon:
            raise HorizonMismatchError(
                f"horizons differ: {self.horizon} and {other.horizon}"
            )

    def __add__(self, other: "FiniteSequence") -> "FiniteSequence":
        self._check_horizon(other)
        return FiniteSequence(x + y for x, y in zip(self.values, other.values))

    def __mul__(self, other: "FiniteSequence") -> "FiniteSequence":
        self._check_horizon(other)
        return FiniteSequence(x * y for x, y in zip(self.values, other.values))

    def scale(self, q: Number) -> "FiniteSequence":
        return FiniteSequence(x * q for x in self.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteSequence):
            return NotImplemented
        return self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def first_difference(self, other: "FiniteSequence") -> int:
        """Smallest m where the sequences differ, or 0 when they agree."""
        self._check_horizon(other)
        for m, (x, y) in enumerate(zip(self.values, other.values), start=1):
            if x != y:
                return m
        return 0

    def to_wire(self) -> List[str]:
        return [format_rational(v) for v in self.values]

    def __repr__(self) -> str:
        return f"FiniteSequence({self.to_wire()!r})"


def prefix_sum(s: FiniteSequence) -> FiniteSequence:
    """m -> f(1) + ... + f(m)."""
    return FiniteSequence(accumulate(s.values))


class SumModel(RotaBaxterModel[FiniteSequence]):
    """Finite sequences with pointwise product and P = prefix_sum."""

    name = "sum"
    weight = Fraction(-1)

    def apply(self, u: FiniteSequence) -> FiniteSequence:
        return prefix_sum(u)

    def multiply(self, u: FiniteSequence, v: FiniteSequence) -> FiniteSequence:
        return u * v

    def add(self, u: FiniteSequence, v: FiniteSequence) -> FiniteSequence:
        return u + v

    def scale(self, u: FiniteSequence, q: Fraction) -> FiniteSequence:
        return u.scale(q)

    def zero_like(self, u: FiniteSequence) -> FiniteSequence:
        return FiniteSequence.constant(0, u.horizon)

    def random_element(self, rng: np.random.Generator) -> FiniteSequence:
        horizon = self.config.get("horizon", 30)
        return FiniteSequence(int(v) for v in rng.integers(-9, 10, size=horizon))

    def describe(self, u: FiniteSequence) -> List[str]:
        return u.to_wire()


_MODEL = SumModel()


def eval_tree_sum(t: Tree, f: FiniteSequence, g: FiniteSequence) -> FiniteSequence:
    """P^c(P^a(f) P^b(g)) with P = prefix_sum."""
    if f.horizon != g.horizon:
        raise HorizonMismatchError(f"horizons differ: {f.horizon} and {g.horizon}")
    return _MODEL.eval_tree(t, f, g)


def check_combination_sum(
    lhs: Tree, rhs: Combination, f: FiniteSequence, g: FiniteSequence
) -> bool:
    """Exact check of lhs = rhs at λ = -1, at every m up to the horizon."""
    if f.horizon != g.horizon:
        raise HorizonMismatchError(f"horizons differ: {f.horizon} and {g.horizon}")
    return _MODEL.check_combination(lhs, rhs, f, g)
