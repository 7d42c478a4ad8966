"""
Rewrite engine - the Rota-Baxter identity as three weighted moves on trees.

A tree T(a,b,c) with both legs nonempty rewrites to

    T(a-1, b, c+1) + T(a, b-1, c+1) + λ T(a-1, b-1, c+1)

(left dot up, right dot up, merged pair up). Repeating until a leg is empty
gives the normal form. Two implementations are provided: a memoized one used
everywhere, and a naive replace-until-fixpoint oracle used to check it.
"""

import logging
import threading
from functools import lru_cache
from typing import Dict, Tuple

from rbtrees.config import Settings, get_settings
from rbtrees.errors import CapExceededError, NoApplicableMoveError
from rbtrees.terms import LAMBDA, ONE, ZERO, Combination, LambdaPoly, Tree

logger = logging.getLogger(__name__)


def expand_step(t: Tree) -> Combination:
    """Apply the Rota-Baxter identity once at the root of t."""
    if t.is_normal_form:
        raise NoApplicableMoveError(f"no move applies to {t}: a leg is already empty")
    neck = t.c + 1
    return Combination(
        {
            Tree(t.a - 1, t.b, neck): ONE,
            Tree(t.a, t.b - 1, neck): ONE,
            Tree(t.a - 1, t.b - 1, neck): LAMBDA,
        }
    )


def neck_shift(u: Combination, k: int) -> Combination:
    """Add k neck dots to every tree of u."""
    return u.neck_shift(k)


class NormalFormEngine:
    """
    Computes normal forms of trees.

    Every move appends one dot to the neck and leaves it otherwise untouched,
    and a path between two trees with nonempty legs only depends on the
    difference of their leg sizes. The engine therefore memoizes, per offset
    (x, y), the λ-polynomial whose coefficient of λ^e counts move paths with
    e merged moves that shrink the legs by (x, y). Normal forms of T(a,b,0)
    are assembled from that table and cached; other necks are shifted copies.

    Tables are shared between threads behind a single lock.
    """

    def __init__(
        self,
        max_sum: int = 2000,
        max_naive_sum: int = 14,
        max_terms: int = 1_000_000,
    ):
        """
        Initialize the engine.

        Args:
            max_sum: Cap on a+b for memoized normalization
            max_naive_sum: Cap on a+b for the naive oracle
            max_terms: Cap on the number of trees in a produced normal form
        """
        self.max_sum = max_sum
        self.max_naive_sum = max_naive_sum
        self.max_terms = max_terms
        self._lock = threading.Lock()
        self._paths: Dict[Tuple[int, int], LambdaPoly] = {(0, 0): ONE}
        self._extent = (1, 1)
        self._normal_forms: Dict[Tuple[int, int], Combination] = {}

    @classmethod
    def from_settings(cls, settings: Settings) -> "NormalFormEngine":
        return cls(
            max_sum=settings.max_memo_sum,
            max_naive_sum=settings.max_naive_sum,
            max_terms=settings.max_terms,
        )

    def clear(self) -> None:
        """Drop all memoized tables."""
        with self._lock:
            self._paths = {(0, 0): ONE}
            self._extent = (1, 1)
            self._normal_forms.clear()

    @property
    def table_size(self) -> int:
        return len(self._paths)

    def path_polynomial(self, x: int, y: int) -> LambdaPoly:
        """Weighted count of move paths shrinking the legs by (x, y)."""
        if x < 0 or y < 0:
            return ZERO
        with self._lock:
            self._grow(x + 1, y + 1)
            return self._paths[(x, y)]

    def _grow(self, nx: int, ny: int) -> None:
        old_x, old_y = self._extent
        new_x, new_y = max(old_x, nx), max(old_y, ny)
        if (new_x, new_y) == (old_x, old_y):
            return
        paths = self._paths
        for x in range(new_x):
            start = old_y if x < old_x else 0
            for y in range(start, new_y):
                if x == 0 and y == 0:
                    continue
                total = ZERO
                if x > 0:
                    total = total + paths[(x - 1, y)]
                if y > 0:
                    total = total + paths[(x, y - 1)]
                if x > 0 and y > 0:
                    total = total + paths[(x - 1, y - 1)].shift(1)
                paths[(x, y)] = total
        self._extent = (new_x, new_y)

    def normal_form(self, t: Tree) -> Combination:
        """Normal form of t, supported only on trees with an empty leg."""
        if t.is_normal_form:
            return Combination.single(t)
        if t.a + t.b > self.max_sum:
            raise CapExceededError("a+b", t.a + t.b, self.max_sum)
        key = (t.a, t.b)
        with self._lock:
            cached = self._normal_forms.get(key)
            if cached is None:
                self._grow(t.a, t.b)
                cached = self._assemble(t.a, t.b)
                self._normal_forms[key] = cached
                logger.debug(
                    "Normalized T(%d,%d,0): %d terms, path table %d entries",
                    t.a, t.b, len(cached), len(self._paths),
                )
        return cached.neck_shift(t.c)

    def _assemble(self, a: int, b: int) -> Combination:
        acc: Dict[Tree, Dict[int, int]] = {}

        def collect(x: int, y: int, final_merge: bool, make) -> None:
            # paths reach the last interior tree, then one final move lands in normal form
            base = x + y + 1
            for exponent, coeff in self._paths[(x, y)].terms():
                tree = make(base - exponent)
                slot = acc.setdefault(tree, {})
                e = exponent + 1 if final_merge else exponent
                slot[e] = slot.get(e, 0) + coeff

        for i in range(1, b + 1):
            collect(a - 1, b - i, False, lambda j, i=i: Tree(0, i, j))
        for i in range(0, b):
            collect(a - 1, b - i - 1, True, lambda j, i=i: Tree(0, i, j))
        for i in range(1, a + 1):
            collect(a - i, b - 1, False, lambda j, i=i: Tree(i, 0, j))
        for i in range(1, a):
            collect(a - i - 1, b - 1, True, lambda j, i=i: Tree(i, 0, j))

        if len(acc) > self.max_terms:
            raise CapExceededError("terms", len(acc), self.max_terms)
        return Combination({tree: LambdaPoly(slot) for tree, slot in acc.items()})

    def normal_form_naive(self, t: Tree) -> Combination:
        """
        Normal form by literal replacement until no move applies.

        No memoization and no neck shortcut: every intermediate term is
        expanded on its own, so the cost grows like the number of move paths.
        """
        if t.a + t.b > self.max_naive_sum:
            raise CapExceededError("a+b (naive)", t.a + t.b, self.max_naive_sum)
        acc: Dict[Tree, LambdaPoly] = {}
        stack = [(t, ONE)]
        while stack:
            tree, weight = stack.pop()
            if tree.is_normal_form:
                acc[tree] = acc.get(tree, ZERO) + weight
                continue
            for child, coeff in expand_step(tree).items():
                stack.append((child, weight * coeff))
        return Combination(acc)


@lru_cache()
def get_engine() -> NormalFormEngine:
    """Process-wide engine configured from settings."""
    return NormalFormEngine.from_settings(get_settings())


def normal_form(t: Tree) -> Combination:
    return get_engine().normal_form(t)


def normal_form_naive(t: Tree) -> Combination:
    return get_engine().normal_form_naive(t)


def delannoy(a: int, b: int) -> int:
    """Delannoy number: D(a,0) = D(0,b) = 1, D(a,b) = D(a-1,b) + D(a,b-1) + D(a-1,b-1)."""
    row = [1] * (b + 1)
    for _ in range(a):
        prev_diag = row[0]
        for y in range(1, b + 1):
            current = row[y]
            row[y] = row[y] + row[y - 1] + prev_diag
            prev_diag = current
    return row[b]


def coefficient_sum(u: Combination, value: int) -> int:
    """Sum of all coefficients of u at λ = value."""
    return sum(u.evaluate_lambda(value).values())
