"""Tree terms T(a,b,c)."""

from dataclasses import dataclass
from typing import Tuple


def _power(symbol: str, exponent: int, latex: bool) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return symbol
    return f"{symbol}^{{{exponent}}}" if latex else f"{symbol}^{exponent}"


@dataclass(frozen=True, order=True)
class Tree:
    """
    The tree with a dots on the left leg, b on the right leg and c on the neck.

    Read as an operator it is P^c(P^a(x) P^b(y)). Ordering is lexicographic
    on (a, b, c), which is the canonical emission order.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"Tree.{name} must be an integer, got {value!r}")
            if value < 0:
                raise ValueError(f"Tree.{name} must be nonnegative, got {value}")

    @property
    def is_normal_form(self) -> bool:
        """True for T(0,i,j), T(i,0,j) and T(0,0,j)."""
        return self.a == 0 or self.b == 0

    @property
    def degree(self) -> int:
        """Total number of dots."""
        return self.a + self.b + self.c

    def shifted(self, k: int) -> "Tree":
        """Add k dots to the neck."""
        if k == 0:
            return self
        return Tree(self.a, self.b, self.c + k)

    def swapped(self) -> "Tree":
        """Exchange the two legs."""
        return Tree(self.b, self.a, self.c)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def operator_notation(self, latex: bool = False) -> str:
        """Render as P^c(P^a(x)P^b(y)), dropping unit and empty powers."""
        left = _power("P", self.a, latex)
        right = _power("P", self.b, latex)
        left = f"{left}(x)" if left else "x"
        right = f"{right}(y)" if right else "y"
        product = f"{left}{right}"
        neck = _power("P", self.c, latex)
        return f"{neck}({product})" if neck else product

    def __str__(self) -> str:
        return f"T({self.a},{self.b},{self.c})"


def is_normal_form(t: Tree) -> bool:
    """True iff no move applies to t (an empty leg)."""
    return t.is_normal_form
