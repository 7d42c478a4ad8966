"""
Polynomial integration model, weight 0.

P(f)(y) is the integral of f from 0 to y. Iterated integration has a kernel,
the volume v_a(x, y) of the order simplex x <= x_1 <= ... <= x_a <= y:

    P^(a+1)(f)(y) = integral over [0, y] of f(x) v_a(x, y) dx
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from rbtrees.errors import InsufficientSamplesError
from rbtrees.models.base import RotaBaxterModel
from rbtrees.models.polynomial import ONE, ZERO, Number, RationalPolynomial
from rbtrees.terms import Combination, Tree

logger = logging.getLogger(__name__)


def integrate_from_zero(p: RationalPolynomial) -> RationalPolynomial:
    """Antiderivative with zero constant term."""
    return p.integral()


class IntegralModel(RotaBaxterModel[RationalPolynomial]):
    """Rational polynomials with P = integrate_from_zero."""

    name = "integral"
    weight = Fraction(0)

    def apply(self, u: RationalPolynomial) -> RationalPolynomial:
        return integrate_from_zero(u)

    def multiply(self, u: RationalPolynomial, v: RationalPolynomial) -> RationalPolynomial:
        return u * v

    def add(self, u: RationalPolynomial, v: RationalPolynomial) -> RationalPolynomial:
        return u + v

    def scale(self, u: RationalPolynomial, q: Fraction) -> RationalPolynomial:
        return u * q

    def zero_like(self, u: RationalPolynomial) -> RationalPolynomial:
        return ZERO

    def random_element(self, rng: np.random.Generator) -> RationalPolynomial:
        max_degree = self.config.get("max_degree", 4)
        degree = int(rng.integers(0, max_degree + 1))
        return RationalPolynomial(int(c) for c in rng.integers(-9, 10, size=degree + 1))

    def describe(self, u: RationalPolynomial) -> List[str]:
        return u.to_wire()


_MODEL = IntegralModel()


def eval_tree_integral(t: Tree, f: RationalPolynomial, g: RationalPolynomial) -> RationalPolynomial:
    """P^c(P^a(f) P^b(g)) with P = integrate_from_zero."""
    return _MODEL.eval_tree(t, f, g)


def check_combination_integral(
    lhs: Tree, rhs: Combination, f: RationalPolynomial, g: RationalPolynomial
) -> bool:
    """Exact polynomial check of lhs = rhs at λ = 0."""
    return _MODEL.check_combination(lhs, rhs, f, g)


class SimplexKernel:
    """
    A polynomial in two variables, stored as a polynomial in x whose
    coefficients are polynomials in y: coeffs[k] multiplies x^k.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalPolynomial]):
        terms = list(coeffs)
        while terms and not terms[-1]:
            terms.pop()
        self.coeffs: Tuple[RationalPolynomial, ...] = tuple(terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplexKernel):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    @property
    def total_degree(self) -> int:
        if not self.coeffs:
            return -1
        return max(k + p.degree for k, p in enumerate(self.coeffs) if p)

    def coefficient(self, x_power: int, y_power: int) -> Fraction:
        if 0 <= x_power < len(self.coeffs):
            return self.coeffs[x_power].coefficient(y_power)
        return Fraction(0)

    def integrate_from_x(self) -> "SimplexKernel":
        """The kernel w(x, y) = integral over t in [x, y] of self(t, y) dt."""
        constant = ZERO
        coeffs: List[RationalPolynomial] = [ZERO]
        for k, p in enumerate(self.coeffs):
            # t^k integrates to (y^(k+1) - x^(k+1)) / (k+1)
            scale = Fraction(1, k + 1)
            constant = constant + p * RationalPolynomial.monomial(scale, k + 1)
            coeffs.append(p * -scale)
        coeffs[0] = constant
        return SimplexKernel(coeffs)

    def substitute_y(self, y: Number) -> RationalPolynomial:
        """The univariate polynomial x -> self(x, y) at a fixed y."""
        return RationalPolynomial(p(y) for p in self.coeffs)

    def apply(self, f: RationalPolynomial) -> RationalPolynomial:
        """The polynomial y -> integral over [0, y] of f(x) self(x, y) dx."""
        total = ZERO
        x_power = ONE
        for p in self.coeffs:
            total = total + p * (f * x_power).integral()
            x_power = x_power * RationalPolynomial.monomial(1, 1)
        return total

    def is_normalized(self, a: int) -> bool:
        """True iff a! times the kernel has integer coefficients."""
        scale = factorial(a)
        return all((c * scale).denominator == 1 for p in self.coeffs for c in p.coeffs)

    def __str__(self) -> str:
        parts = []
        for k, p in enumerate(self.coeffs):
            if p:
                parts.append(f"({p.render('y')})" if k == 0 else f"({p.render('y')})*x^{k}")
        return " + ".join(parts) or "0"


@lru_cache(maxsize=None)
def simplex_volume(a: int) -> SimplexKernel:
    """v_a(x, y) by repeated integration from v_0 = 1."""
    if a < 0:
        raise ValueError(f"simplex dimension must be nonnegative, got {a}")
    if a == 0:
        return SimplexKernel([ONE])
    return simplex_volume(a - 1).integrate_from_x()


def binomial_kernel(a: int) -> SimplexKernel:
    """(y - x)^a / a! written out with binomial coefficients."""
    scale = Fraction(1, factorial(a))
    return SimplexKernel(
        RationalPolynomial.monomial(scale * comb(a, k) * (-1) ** k, a - k) for k in range(a + 1)
    )


def kernel_apply(a: int, f: RationalPolynomial) -> RationalPolynomial:
    """Integral over [0, y] of f(x) v_a(x, y) dx, as a polynomial in y."""
    return simplex_volume(a).apply(f)


def kernel_representation_check(
    a: int, f: RationalPolynomial, samples: Sequence[Number]
) -> bool:
    """
    Check P^(a+1)(f)(y0) against the kernel integral at each sample y0.

    Both sides are polynomials in y of degree deg f + a + 1, so at least
    deg f + a + 2 distinct samples are required to certify the identity.
    """
    points = [Fraction(s) for s in samples]
    if len(set(points)) != len(points):
        raise InsufficientSamplesError("sample points must be distinct")
    needed = max(f.degree, 0) + a + 2
    if len(points) < needed:
        raise InsufficientSamplesError(
            f"{len(points)} samples cannot certify a degree {needed - 1} identity"
        )
    kernel = simplex_volume(a)
    target = _MODEL.power(f, a + 1)
    for y0 in points:
        lhs = (f * kernel.substitute_y(y0)).integral()(y0)
        if lhs != target(y0):
            logger.debug("Kernel representation fails for a=%d at y=%s", a, y0)
            return False
    return True


def double_integral_check(
    a: int, b: int, f: RationalPolynomial, g: RationalPolynomial
) -> bool:
    """
    Weight-0 product rule for kernel integrals:

        (K_a f)(K_b g) = sum_{i=1}^{b+1} C(a+b+1-i, a) K_{a+b+1-i}(f K_{i-1} g)
                       + sum_{i=1}^{a+1} C(a+b+1-i, b) K_{a+b+1-i}(g K_{i-1} f)

    where K_n f = kernel_apply(n, f). Computed through simplex kernels only.
    """
    if a < 0 or b < 0:
        raise ValueError(f"kernel orders must be nonnegative, got a={a}, b={b}")
    lhs = kernel_apply(a, f) * kernel_apply(b, g)
    rhs = ZERO
    for i in range(1, b + 2):
        inner = f * kernel_apply(i - 1, g)
        rhs = rhs + kernel_apply(a + b + 1 - i, inner) * comb(a + b + 1 - i, a)
    for i in range(1, a + 2):
        inner = g * kernel_apply(i - 1, f)
        rhs = rhs + kernel_apply(a + b + 1 - i, inner) * comb(a + b + 1 - i, b)
    return lhs == rhs
