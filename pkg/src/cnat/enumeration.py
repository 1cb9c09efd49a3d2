"""
Exhaustive generation of CNATs and the sign tallies built on it.

Generation goes shape first. A complete binary tree with ``n`` leaves is
drawn on the grid by giving every left child (the child below) a fresh row
and every right child (the child to the right) a fresh column; the other
coordinate is inherited from the parent. Fresh labels only have to exceed the
parent's coordinate, so the row labels form a linear extension of one forest
and the column labels of another, chosen independently.
"""

from __future__ import annotations

import enum
import functools
import itertools
import os
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import (
    Cnat,
    CnatError,
    OracleBoundExceeded,
    cnat_from_dots,
    from_matrix,
    leaf_permutation,
    sign,
)
from .transform import is_all_short

__all__ = [
    "TreeShape", "SignCounts", "TheoremReport", "Verdict",
    "BoundExceeded", "DEFAULT_BOUND", "NAIVE_BOUND", "size_bound",
    "tree_shapes", "linear_extensions", "enumerate_cnats", "naive_enumerate",
    "count_cnats", "count_by_sign", "verify_theorem", "count_all_short",
]

DEFAULT_BOUND = 8
NAIVE_BOUND = 4
BOUND_ENV = "CNAT_MAX_SIZE"

# A shape is None for a leaf, or a (left, right) pair for an internal node.
TreeShape = tuple | None


class BoundExceeded(CnatError):
    pass


def size_bound(bound: int | None = None) -> int:
    """Explicit bound, else ``$CNAT_MAX_SIZE``, else :data:`DEFAULT_BOUND`."""
    if bound is not None:
        return bound
    return int(os.environ.get(BOUND_ENV, DEFAULT_BOUND))


def _check_size(n: int, bound: int | None) -> None:
    limit = size_bound(bound)
    if n < 1:
        raise ValueError(f"size must be positive, got {n}")
    if n > limit:
        raise BoundExceeded(f"size {n} exceeds the enumeration bound {limit}")


@functools.lru_cache(maxsize=None)
def _shapes(n: int) -> tuple[TreeShape, ...]:
    if n == 1:
        return (None,)
    out = []
    for k in range(1, n):
        for left in _shapes(k):
            for right in _shapes(n - k):
                out.append((left, right))
    return tuple(out)


def tree_shapes(n: int) -> Iterator[TreeShape]:
    """
    Complete binary trees with ``n`` leaves, left subtree size ascending.

    >>> [len(list(tree_shapes(n))) for n in range(1, 7)]
    [1, 1, 2, 5, 14, 42]
    """
    if n < 1:
        raise ValueError(f"size must be positive, got {n}")
    yield from _shapes(n)


def linear_extensions(parents: list[int | None], first: int = 1) -> Iterator[tuple[int, ...]]:
    """
    Labelings ``first, first+1, ...`` of a forest such that every node's
    label exceeds its parent's, in lexicographic order of the label vector.

    ``parents[i]`` is the index of node ``i``'s parent, or None for a root.

    >>> list(linear_extensions([None, 0, 0]))
    [(1, 2, 3), (1, 3, 2)]
    """
    m = len(parents)
    children: list[list[int]] = [[] for _ in range(m)]
    for i, p in enumerate(parents):
        if p is not None:
            children[p].append(i)
    labels = [0] * m

    def place(avail: frozenset[int], nxt: int):
        if nxt == first + m:
            yield tuple(labels)
            return
        for i in sorted(avail):
            labels[i] = nxt
            yield from place((avail - {i}) | frozenset(children[i]), nxt + 1)

    roots = frozenset(i for i, p in enumerate(parents) if p is None)
    exts = list(place(roots, first))
    exts.sort()
    yield from exts


@dataclass(frozen=True)
class _Plan:
    """Per-shape data: which row/column bearer each tree node reads."""

    size: int
    row_of: tuple[int, ...]  # node -> index into the row-bearer list
    col_of: tuple[int, ...]
    row_forest: list[int | None]
    col_forest: list[int | None]


def _plan(shape: TreeShape) -> _Plan:
    # bearer 0 is the root on both axes; its label is fixed to 1
    row_of: list[int] = []
    col_of: list[int] = []
    row_forest: list[int | None] = [None]
    col_forest: list[int | None] = [None]
    leaves = 0

    def walk(node, row_b, col_b):
        nonlocal leaves
        row_of.append(row_b)
        col_of.append(col_b)
        if node is None:
            leaves += 1
            return
        left, right = node
        row_forest.append(row_b)
        walk(left, len(row_forest) - 1, col_b)
        col_forest.append(col_b)
        walk(right, row_b, len(col_forest) - 1)

    walk(shape, 0, 0)
    return _Plan(leaves, tuple(row_of), tuple(col_of), row_forest, col_forest)


def _extensions_with_root(forest: list[int | None]) -> list[tuple[int, ...]]:
    # the root carries label 1, the rest take 2..n
    rest = [None if p == 0 else p - 1 for p in forest[1:]]
    return [(1,) + ext for ext in linear_extensions(rest, first=2)]


def _shape_cnats(shape: TreeShape) -> Iterator[Cnat]:
    plan = _plan(shape)
    row_labels = _extensions_with_root(plan.row_forest)
    col_labels = _extensions_with_root(plan.col_forest)
    for rl in row_labels:
        rows = [rl[b] for b in plan.row_of]
        for cl in col_labels:
            dots = zip(rows, (cl[b] for b in plan.col_of))
            yield cnat_from_dots(plan.size, dots)


def enumerate_cnats(n: int, bound: int | None = None) -> Iterator[Cnat]:
    """
    Every CNAT of size ``n`` exactly once, shapes in :func:`tree_shapes`
    order and labelings in lexicographic order within a shape.
    """
    _check_size(n, bound)
    for shape in _shapes(n):
        yield from _shape_cnats(shape)


def naive_enumerate(n: int) -> Iterator[Cnat]:
    """All ``n x n`` 0/1 matrices filtered through :func:`from_matrix`."""
    if n > NAIVE_BOUND:
        raise OracleBoundExceeded(f"naive scan of 2^{n * n} matrices refused for n={n}")
    for bits in itertools.product((0, 1), repeat=n * n):
        rows = [bits[i * n:(i + 1) * n] for i in range(n)]
        try:
            yield from_matrix(rows)
        except CnatError:
            pass


# -- tallies ----------------------------------------------------------------

@dataclass(frozen=True)
class SignCounts:
    n: int
    plus: int
    minus: int

    @property
    def total(self) -> int:
        return self.plus + self.minus

    def __add__(self, other: "SignCounts") -> "SignCounts":
        if other.n != self.n:
            raise ValueError("cannot merge tallies of different sizes")
        return SignCounts(self.n, self.plus + other.plus, self.minus + other.minus)


def _tally_shape(shape: TreeShape) -> tuple[int, int]:
    plus = minus = 0
    for t in _shape_cnats(shape):
        if sign(leaf_permutation(t)) > 0:
            plus += 1
        else:
            minus += 1
    return plus, minus


def count_by_sign(n: int, bound: int | None = None, jobs: int = 1) -> SignCounts:
    """Tally ``sign(pi(T))`` over every CNAT of size ``n``."""
    _check_size(n, bound)
    shapes = _shapes(n)
    if jobs > 1 and len(shapes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_tally_shape, shapes))
    else:
        parts = [_tally_shape(s) for s in shapes]
    return SignCounts(n, sum(p for p, _ in parts), sum(m for _, m in parts))


def count_cnats(n: int, bound: int | None = None, jobs: int = 1) -> int:
    return count_by_sign(n, bound, jobs).total


class Verdict(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not applicable"


@dataclass(frozen=True)
class TheoremReport:
    n: int
    observed: SignCounts
    expected_plus: int | None
    expected_minus: int | None
    verdict: Verdict

    def lines(self) -> list[str]:
        def show(v):
            return "n/a" if v is None else str(v)

        return [
            f"n={self.n}",
            f"T_{self.n}={self.observed.total}",
            f"expected T({self.n};+1)={show(self.expected_plus)} "
            f"T({self.n};-1)={show(self.expected_minus)}",
            f"observed T({self.n};+1)={self.observed.plus} T({self.n};-1)={self.observed.minus}",
            f"verdict: {self.verdict.value}",
        ]


def verify_theorem(n: int, bound: int | None = None, jobs: int = 1) -> TheoremReport:
    """
    Compare the observed sign tally of size ``n`` with the closed forms:
    ``T_n / 2`` each for odd ``n > 1``, and
    ``(T_2p +- (-1)^p T_p) / 2`` for ``n = 2p``.
    """
    observed = count_by_sign(n, bound, jobs)
    total = observed.total
    if n == 1:
        return TheoremReport(n, observed, None, None, Verdict.NOT_APPLICABLE)
    if n % 2:
        plus = minus = total / 2
    else:
        p = n // 2
        shift = (-1) ** p * count_cnats(p, bound)
        plus, minus = (total + shift) / 2, (total - shift) / 2
    # a non-integer expectation can never match, keep it visible as a fail
    exp_plus = int(plus) if plus == int(plus) else plus
    exp_minus = int(minus) if minus == int(minus) else minus
    ok = (observed.plus, observed.minus) == (exp_plus, exp_minus)
    return TheoremReport(n, observed, exp_plus, exp_minus, Verdict.PASS if ok else Verdict.FAIL)


def count_all_short(n: int, bound: int | None = None) -> int:
    """Number of size-``n`` CNATs whose leaves are all short."""
    _check_size(n, bound)
    return sum(1 for t in enumerate_cnats(n, bound) if is_all_short(t))
