"""Integer polynomials in the weight λ."""

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

Scalar = Union[int, Fraction]

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


class LambdaPoly:
    """
    A polynomial in λ with arbitrary-precision integer coefficients.

    Stored sparsely as exponent -> coefficient with no zero entries. Instances
    are immutable; every operation returns a new polynomial.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], Iterable[Tuple[int, int]], None] = None):
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        canonical: Dict[int, int] = {}
        for exponent, coeff in items:
            if exponent < 0:
                raise ValueError(f"negative exponent {exponent}")
            total = canonical.get(exponent, 0) + int(coeff)
            if total:
                canonical[exponent] = total
            else:
                canonical.pop(exponent, None)
        self._terms = canonical
        self._hash = None

    @classmethod
    def constant(cls, value: int) -> "LambdaPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> "LambdaPoly":
        return cls({exponent: coeff})

    @classmethod
    def _trusted(cls, terms: Dict[int, int]) -> "LambdaPoly":
        # caller guarantees canonical form
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    def terms(self) -> List[Tuple[int, int]]:
        """(exponent, coefficient) pairs by ascending exponent."""
        return sorted(self._terms.items())

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    @property
    def degree(self) -> int:
        """Highest exponent; -1 for the zero polynomial."""
        return max(self._terms, default=-1)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.terms())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: Union["LambdaPoly", int]) -> "LambdaPoly":
        if isinstance(other, int):
            other = LambdaPoly.constant(other)
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        result = dict(self._terms)
        for exponent, coeff in other._terms.items():
            total = result.get(exponent, 0) + coeff
            if total:
                result[exponent] = total
            else:
                del result[exponent]
        return LambdaPoly._trusted(result)

    __radd__ = __add__

    def __neg__(self) -> "LambdaPoly":
        return LambdaPoly._trusted({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union["LambdaPoly", int]) -> "LambdaPoly":
        if isinstance(other, int):
            other = LambdaPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LambdaPoly":
        return LambdaPoly.constant(other) - self

    def __mul__(self, other: Union["LambdaPoly", int]) -> "LambdaPoly":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LambdaPoly._trusted({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        result: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return LambdaPoly._trusted({e: c for e, c in result.items() if c})

    __rmul__ = __mul__

    def shift(self, k: int) -> "LambdaPoly":
        """Multiply by λ^k."""
        if k == 0:
            return self
        return LambdaPoly._trusted({e + k: c for e, c in self._terms.items()})

    def evaluate(self, value: Scalar) -> Union[int, Fraction]:
        """Exact value at λ = value."""
        total: Union[int, Fraction] = 0
        for exponent, coeff in self._terms.items():
            total += coeff * value**exponent
        return total

    def to_wire(self) -> List[Tuple[int, str]]:
        """[[exponent, "decimal"], ...] by ascending exponent."""
        return [(e, str(c)) for e, c in self.terms()]

    @classmethod
    def from_wire(cls, entries: Iterable[Iterable]) -> "LambdaPoly":
        return cls((int(e), int(c)) for e, c in entries)

    def to_latex(self) -> str:
        return self._render(lambda e: r"\lambda" if e == 1 else rf"\lambda^{{{e}}}")

    def __str__(self) -> str:
        return self._render(lambda e: "λ" if e == 1 else "λ" + str(e).translate(_SUPERSCRIPTS))

    def _render(self, power) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exponent, coeff in self.terms():
            if exponent == 0:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = power(exponent)
            else:
                body = f"{abs(coeff)}{power(exponent)}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LambdaPoly({dict(self.terms())!r})"


ZERO = LambdaPoly()
ONE = LambdaPoly.constant(1)
LAMBDA = LambdaPoly.monomial(1, 1)
