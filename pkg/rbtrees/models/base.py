"""Base class for concrete Rota-Baxter algebras."""

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Dict, Generic, Optional, TypeVar

import numpy as np

from rbtrees.terms import Combination, Tree

V = TypeVar("V")


class RotaBaxterModel(ABC, Generic[V]):
    """
    An algebra A with a linear operator P satisfying

        P(u)P(v) = P(uP(v)) + P(P(u)v) + weight * P(uv).

    Subclasses supply the algebra operations; tree evaluation and identity
    checks are shared.
    """

    name: str = "abstract"
    weight: Fraction = Fraction(0)

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """Initialize model with configuration."""
        self.config = config or {}

    @abstractmethod
    def apply(self, u: V) -> V:
        """The Rota-Baxter operator P."""

    @abstractmethod
    def multiply(self, u: V, v: V) -> V:
        """The algebra product."""

    @abstractmethod
    def add(self, u: V, v: V) -> V:
        """Sum of two elements."""

    @abstractmethod
    def scale(self, u: V, q: Fraction) -> V:
        """Scalar multiple."""

    @abstractmethod
    def zero_like(self, u: V) -> V:
        """Zero element compatible with u."""

    @abstractmethod
    def random_element(self, rng: np.random.Generator) -> V:
        """A small random element with integer data in [-9, 9]."""

    def power(self, u: V, n: int) -> V:
        """P applied n times."""
        for _ in range(n):
            u = self.apply(u)
        return u

    def eval_tree(self, t: Tree, f: V, g: V) -> V:
        """P^c(P^a(f) P^b(g))."""
        return self.power(self.multiply(self.power(f, t.a), self.power(g, t.b)), t.c)

    def evaluate(self, rhs: Combination, f: V, g: V) -> V:
        """Value of a combination with its coefficients specialized at the model weight."""
        total = self.zero_like(f)
        for tree, coeff in rhs.evaluate_lambda(self.weight).items():
            total = self.add(total, self.scale(self.eval_tree(tree, f, g), Fraction(coeff)))
        return total

    def check_combination(self, lhs: Tree, rhs: Combination, f: V, g: V) -> bool:
        """True iff lhs and rhs evaluate to the same element on (f, g)."""
        return self.eval_tree(lhs, f, g) == self.evaluate(rhs, f, g)

    def check_rota_baxter_law(self, u: V, v: V) -> bool:
        """The defining identity on one pair of elements."""
        pu, pv = self.apply(u), self.apply(v)
        lhs = self.multiply(pu, pv)
        rhs = self.add(
            self.add(self.apply(self.multiply(u, pv)), self.apply(self.multiply(pu, v))),
            self.scale(self.apply(self.multiply(u, v)), self.weight),
        )
        return lhs == rhs

    def describe(self, u: V) -> Any:
        """JSON-ready form of an element."""
        return str(u)
