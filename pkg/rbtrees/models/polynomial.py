"""Class for representing polynomials of one variable with rational coefficients."""

from fractions import Fraction
from typing import Iterable, List, Tuple, Union

Number = Union[int, Fraction]


def format_rational(value: Number) -> str:
    """'p/q', or 'p' for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class RationalPolynomial:
    """
    Dense coefficient tuple over Q, index = power of the variable.

    Trailing zeros are stripped, so equal polynomials have equal tuples and
    the zero polynomial is the empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        terms = [Fraction(c) for c in coeffs]
        while terms and terms[-1] == 0:
            terms.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(terms)

    @classmethod
    def constant(cls, value: Number) -> "RationalPolynomial":
        return cls([value])

    @classmethod
    def monomial(cls, coeff: Number, power: int) -> "RationalPolynomial":
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(self.coefficient(k) + other.coefficient(k) for k in range(size))

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["RationalPolynomial", Number]) -> "RationalPolynomial":
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        result = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    result[i + j] += x * y
        return RationalPolynomial(result)

    __rmul__ = __mul__

    def __call__(self, value: Number) -> Fraction:
        """Evaluate by Horner's rule."""
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * value + c
        return total

    def integral(self) -> "RationalPolynomial":
        """Antiderivative vanishing at 0: c_k x^k -> c_k / (k+1) x^(k+1)."""
        return RationalPolynomial([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def to_wire(self) -> List[str]:
        return [format_rational(c) for c in self.coeffs]

    def render(self, var: str = "x") -> str:
        """Human-readable form in the given variable."""
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue
            magnitude = abs(c)
            if power == 0:
                body = format_rational(magnitude)
            else:
                name = var if power == 1 else f"{var}^{power}"
                if magnitude == 1:
                    body = name
                elif magnitude.denominator == 1:
                    body = f"{magnitude.numerator}{name}"
                else:
                    body = f"{magnitude.numerator}{name}/{magnitude.denominator}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"RationalPolynomial({self.to_wire()!r})"


ZERO = RationalPolynomial()
ONE = RationalPolynomial.constant(1)
X = RationalPolynomial.monomial(1, 1)
