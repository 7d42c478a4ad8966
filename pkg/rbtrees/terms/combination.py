"""Formal linear combinations of trees with λ-polynomial coefficients."""

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from .lambda_poly import ONE, ZERO, LambdaPoly, Scalar
from .tree import Tree


class Combination:
    """
    A finite formal sum of trees with coefficients in Z[λ].

    Zero coefficients are never stored and iteration is always in canonical
    (a, b, c) order, so two equal combinations render identically no matter
    how they were built.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Tree, LambdaPoly]] = None):
        self._terms: Dict[Tree, LambdaPoly] = {}
        for tree, coeff in (terms or {}).items():
            if coeff:
                self._terms[tree] = coeff

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[Tree, LambdaPoly]]) -> "Combination":
        """Accumulate (tree, coefficient) pairs, merging like trees."""
        acc: Dict[Tree, LambdaPoly] = {}
        for tree, coeff in terms:
            acc[tree] = acc.get(tree, ZERO) + coeff
        return cls(acc)

    @classmethod
    def single(cls, tree: Tree, coeff: LambdaPoly = ONE) -> "Combination":
        return cls({tree: coeff})

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, tree: object) -> bool:
        return tree in self._terms

    def __getitem__(self, tree: Tree) -> LambdaPoly:
        return self._terms.get(tree, ZERO)

    def items(self) -> List[Tuple[Tree, LambdaPoly]]:
        return sorted(self._terms.items(), key=lambda item: item[0])

    def __iter__(self) -> Iterator[Tree]:
        return iter(sorted(self._terms))

    def trees(self) -> List[Tree]:
        return sorted(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Combination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "Combination") -> "Combination":
        if not isinstance(other, Combination):
            return NotImplemented
        result = dict(self._terms)
        for tree, coeff in other._terms.items():
            total = result.get(tree, ZERO) + coeff
            if total:
                result[tree] = total
            else:
                result.pop(tree, None)
        return Combination._trusted(result)

    def __neg__(self) -> "Combination":
        return Combination._trusted({t: -c for t, c in self._terms.items()})

    def __sub__(self, other: "Combination") -> "Combination":
        return self + (-other)

    def scale(self, p: Union[LambdaPoly, int]) -> "Combination":
        """Multiply every coefficient by p."""
        return Combination({t: c * p for t, c in self._terms.items()})

    def neck_shift(self, k: int) -> "Combination":
        """Move every tree k dots up the neck."""
        if k < 0:
            raise ValueError(f"neck shift must be nonnegative, got {k}")
        if k == 0:
            return self
        return Combination._trusted({t.shifted(k): c for t, c in self._terms.items()})

    def swapped_legs(self) -> "Combination":
        return Combination._trusted({t.swapped(): c for t, c in self._terms.items()})

    def evaluate_lambda(self, value: Scalar) -> Dict[Tree, Union[int, Fraction]]:
        """Specialize every coefficient at λ = value, dropping zeros."""
        result = {}
        for tree, coeff in self.items():
            number = coeff.evaluate(value)
            if number:
                result[tree] = number
        return result

    def is_normal(self) -> bool:
        """True when every tree is in normal form."""
        return all(t.is_normal_form for t in self._terms)

    @classmethod
    def _trusted(cls, terms: Dict[Tree, LambdaPoly]) -> "Combination":
        combo = cls.__new__(cls)
        combo._terms = terms
        return combo

    def __repr__(self) -> str:
        body = ", ".join(f"{t}: {c}" for t, c in self.items())
        return f"Combination({{{body}}})"


def combination_add(u: Combination, v: Combination) -> Combination:
    return u + v


def combination_scale(u: Combination, p: Union[LambdaPoly, int]) -> Combination:
    return u.scale(p)


def evaluate_lambda(u: Combination, q: Scalar) -> Dict[Tree, Union[int, Fraction]]:
    return u.evaluate_lambda(q)


def lift_constants(values: Mapping[Tree, Union[int, Fraction]]) -> Combination:
    """Turn a specialized (integer-valued) map back into a λ-free combination."""
    terms = {}
    for tree, value in values.items():
        if Fraction(value).denominator != 1:
            raise ValueError(f"coefficient of {tree} is not an integer: {value}")
        terms[tree] = LambdaPoly.constant(int(value))
    return Combination(terms)
