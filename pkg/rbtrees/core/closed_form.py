"""
Closed-form identities for T(a,b,c).

The restricted identity (weight 0) and the generic identity (any weight) are
generated directly from their coefficient formulas. The generic identity is
available as printed and in an oracle-consistent reconciled form; the two
differ only in the second and third of its five sums.

Each normal tree is reached by a last move from an interior tree:

    D1  T(0,i,j)  last move left dot up    from T(1,i)
    D2  T(0,i,j)  last move merged pair    from T(1,i+1)
    D3  T(i,0,j)  last move right dot up   from T(i,1)
    D4  T(i,0,j)  last move merged pair    from T(i+1,1)
    D5  T(0,0,j)  last move merged pair    from T(1,1)

and the earlier j-1 moves interleave freely, which gives the multinomials.
"""

from math import comb
from typing import Callable, Dict, List, NamedTuple

from rbtrees.config import DomainName, IdentityMode
from rbtrees.terms import ZERO, Combination, LambdaPoly, Tree


def multinomial(n: int, k1: int, k2: int, k3: int) -> int:
    """n! / (k1! k2! k3!), or 0 when a part is negative or the parts miss n."""
    if k1 < 0 or k2 < 0 or k3 < 0 or k1 + k2 + k3 != n:
        return 0
    return comb(n, k1) * comb(n - k1, k2)


class DomainPoint(NamedTuple):
    """Index pair of a generic-identity sum; i is 0 for the D5 family."""

    i: int
    j: int


class MoveCounts(NamedTuple):
    """Numbers of moves of each type before the last move, and the last move type."""

    k1: int
    k2: int
    k3: int
    last_move: int


def _require_legs(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise ValueError(f"closed forms need a, b >= 1, got a={a}, b={b}")


def _monomial(count: int, exponent: int) -> LambdaPoly:
    if count == 0:
        return ZERO
    return LambdaPoly.monomial(count, exponent)


# Coefficients


def c1(a: int, b: int, i: int, j: int) -> LambdaPoly:
    return _monomial(multinomial(j - 1, i + j - b - 1, j - a, a + b - i - j), a + b - i - j)


def c2_published(a: int, b: int, i: int, j: int) -> LambdaPoly:
    # printed without i
    return _monomial(multinomial(j - 1, j - b, j - a, a + b - j - 1), a + b - j)


def c2_reconciled(a: int, b: int, i: int, j: int) -> LambdaPoly:
    return _monomial(multinomial(j - 1, i + j - b, j - a, a + b - i - j - 1), a + b - i - j)


def c3(a: int, b: int, i: int, j: int) -> LambdaPoly:
    return _monomial(multinomial(j - 1, j - b, i + j - a - 1, a + b - i - j), a + b - i - j)


def c4(a: int, b: int, i: int, j: int) -> LambdaPoly:
    return _monomial(multinomial(j - 1, j - b, i + j - a, a + b - i - j - 1), a + b - i - j)


def c5(a: int, b: int, i: int, j: int) -> LambdaPoly:
    return _monomial(multinomial(j - 1, j - b, j - a, a + b - j - 1), a + b - j)


CoefficientFn = Callable[[int, int, int, int], LambdaPoly]

COEFFICIENTS: Dict[IdentityMode, Dict[DomainName, CoefficientFn]] = {
    IdentityMode.AS_PUBLISHED: {
        DomainName.D1: c1,
        DomainName.D2: c2_published,
        DomainName.D3: c2_published,  # the third sum is printed with c2
        DomainName.D4: c4,
        DomainName.D5: c5,
    },
    IdentityMode.RECONCILED: {
        DomainName.D1: c1,
        DomainName.D2: c2_reconciled,
        DomainName.D3: c3,
        DomainName.D4: c4,
        DomainName.D5: c5,
    },
}


# Domains


def in_domain(a: int, b: int, which: DomainName, mode: IdentityMode, i: int, j: int) -> bool:
    """Membership of (i, j) in a domain; i is ignored for D5."""
    if j < 1:
        return False
    if which == DomainName.D1:
        return 1 <= i <= b and a <= j and b - i + 1 <= j and j <= a + b - i
    if which == DomainName.D2:
        if mode == IdentityMode.AS_PUBLISHED:
            return 1 <= i <= b - 1 and a <= j and b <= j and j <= a + b - 1
        return 1 <= i <= b - 1 and a <= j and b - i <= j and j <= a + b - i - 1
    if which == DomainName.D3:
        return 1 <= i <= a and a - i + 1 <= j and b <= j and j <= a + b - i
    if which == DomainName.D4:
        return 1 <= i <= a - 1 and a - i <= j and b <= j and j <= a + b - i - 1
    if which == DomainName.D5:
        return a <= j and b <= j and j <= a + b - 1
    raise ValueError(f"Unknown domain: {which}")


def enumerate_domain(
    a: int, b: int, which: DomainName, mode: IdentityMode = IdentityMode.RECONCILED
) -> List[DomainPoint]:
    """All points of a domain, sorted by (i, j)."""
    _require_legs(a, b)
    if which == DomainName.D5:
        return [
            DomainPoint(0, j) for j in range(1, a + b + 1) if in_domain(a, b, which, mode, 0, j)
        ]
    return [
        DomainPoint(i, j)
        for i in range(1, max(a, b) + 1)
        for j in range(1, a + b + 1)
        if in_domain(a, b, which, mode, i, j)
    ]


def _sum_tree(which: DomainName, point: DomainPoint, c: int) -> Tree:
    if which in (DomainName.D1, DomainName.D2):
        return Tree(0, point.i, c + point.j)
    if which in (DomainName.D3, DomainName.D4):
        return Tree(point.i, 0, c + point.j)
    return Tree(0, 0, c + point.j)


# Identities


def restricted_identity(a: int, b: int, c: int = 0) -> Combination:
    """Weight-0 identity: only left and right dots move up."""
    _require_legs(a, b)
    if c < 0:
        raise ValueError(f"neck must be nonnegative, got {c}")
    terms = {}
    for i in range(1, b + 1):
        terms[Tree(0, i, a + b + c - i)] = LambdaPoly.constant(comb(a - 1 + b - i, a - 1))
    for i in range(1, a + 1):
        terms[Tree(i, 0, a + b + c - i)] = LambdaPoly.constant(comb(b - 1 + a - i, b - 1))
    return Combination(terms)


def generic_identity_sums(
    a: int, b: int, c: int = 0, mode: IdentityMode = IdentityMode.RECONCILED
) -> Dict[DomainName, Combination]:
    """Each of the five sums of the generic identity, keyed by its domain."""
    _require_legs(a, b)
    if c < 0:
        raise ValueError(f"neck must be nonnegative, got {c}")
    coefficients = COEFFICIENTS[IdentityMode(mode)]
    sums = {}
    for which in DomainName:
        fn = coefficients[which]
        sums[which] = Combination.from_terms(
            (_sum_tree(which, point, c), fn(a, b, point.i, point.j))
            for point in enumerate_domain(a, b, which, mode)
        )
    return sums


def generic_identity(
    a: int, b: int, c: int = 0, mode: IdentityMode = IdentityMode.RECONCILED
) -> Combination:
    """The generic identity as the sum of its five sums."""
    total = Combination()
    for part in generic_identity_sums(a, b, c, mode).values():
        total = total + part
    return total


# Derivation cross-check


def solve_move_counts(a: int, b: int, which: DomainName, i: int, j: int) -> MoveCounts:
    """
    Solve k1 + k2 + k3 = j - 1 together with the leg constraints of a domain.

    The leg constraints say how many left (k1 + k3) and right (k2 + k3) dots
    must leave before the last move. Negative solutions are returned as is.
    """
    if which == DomainName.D1:
        left, right, last = a - 1, b - i, 1
    elif which == DomainName.D2:
        left, right, last = a - 1, b - i - 1, 3
    elif which == DomainName.D3:
        left, right, last = a - i, b - 1, 2
    elif which == DomainName.D4:
        left, right, last = a - i - 1, b - 1, 3
    else:
        left, right, last = a - 1, b - 1, 3
    k3 = left + right - (j - 1)
    return MoveCounts(left - k3, right - k3, k3, last)


def coefficient_from_moves(counts: MoveCounts) -> LambdaPoly:
    """Multinomial of the interleavings times λ per merged move."""
    n = counts.k1 + counts.k2 + counts.k3
    merges = counts.k3 + (1 if counts.last_move == 3 else 0)
    return _monomial(multinomial(n, counts.k1, counts.k2, counts.k3), merges)
