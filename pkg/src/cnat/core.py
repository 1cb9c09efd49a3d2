"""
Grids of dots: non-ambiguous trees (NATs), complete NATs (CNATs), their
0/1 matrices and their leaf permutations.

Coordinates are 1-based ``(row, col)`` pairs, rows counted from the top and
columns from the left, so the root always sits at ``(1, 1)``.

>>> t = from_matrix(["10110", "11001", "01000", "10000", "00100"])
>>> t.size
5
>>> str(leaf_permutation(t))
'45213'
>>> matrix_determinant(to_matrix(t)) == sign(leaf_permutation(t))
True
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

__all__ = [
    "Dot", "NatGrid", "Cnat", "Permutation",
    "CnatError", "OutOfBounds", "MissingRoot", "AmbiguousDot", "OrphanDot",
    "EmptyRow", "EmptyCol", "IncompleteDot", "NotSquare", "OracleBoundExceeded",
    "validate_nat", "validate_cnat", "cnat_from_dots",
    "to_matrix", "from_matrix", "leaf_permutation",
    "inversions", "sign", "matrix_determinant",
    "DETERMINANT_BOUND",
]

DETERMINANT_BOUND = 8


class Dot(NamedTuple):
    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


# -- errors -----------------------------------------------------------------

class CnatError(ValueError):
    """Base class for every validation failure raised by this package."""

    def __init__(self, message: str, dot: Dot | None = None):
        super().__init__(message)
        self.dot = dot

    @property
    def name(self) -> str:
        return type(self).__name__


class OutOfBounds(CnatError):
    pass


class MissingRoot(CnatError):
    pass


class AmbiguousDot(CnatError):
    """A non-root dot has both a dot above it and a dot to its left."""


class OrphanDot(CnatError):
    """A non-root dot has neither a dot above it nor a dot to its left."""


class EmptyRow(CnatError):
    def __init__(self, row: int):
        super().__init__(f"row {row} contains no dot")
        self.row = row


class EmptyCol(CnatError):
    def __init__(self, col: int):
        super().__init__(f"column {col} contains no dot")
        self.col = col


class IncompleteDot(CnatError):
    """A dot has exactly one of {dot below, dot to the right}."""


class NotSquare(CnatError):
    pass


class OracleBoundExceeded(CnatError):
    pass


# -- grids ------------------------------------------------------------------

@dataclass(frozen=True)
class NatGrid:
    rows: int
    cols: int
    dots: frozenset[Dot]


def _lines(dots: Iterable[Dot]) -> tuple[dict[int, list[int]], dict[int, list[int]]]:
    """Sorted column indices per row, and sorted row indices per column."""
    by_row: dict[int, list[int]] = defaultdict(list)
    by_col: dict[int, list[int]] = defaultdict(list)
    for r, c in dots:
        by_row[r].append(c)
        by_col[c].append(r)
    for v in by_row.values():
        v.sort()
    for v in by_col.values():
        v.sort()
    return by_row, by_col


def validate_nat(rows: int, cols: int, dots: Iterable[Sequence[int]]) -> NatGrid:
    """
    Check the three NAT conditions on an ``rows x cols`` grid.

    Raises the first violation found, scanning root, then dots in
    row-major order, then rows, then columns.

    >>> validate_nat(2, 2, [(1, 1), (2, 2)])
    Traceback (most recent call last):
    ...
    cnat.core.OrphanDot: dot (2,2) has no dot above it and none to its left
    """
    dotset = frozenset(Dot(int(r), int(c)) for r, c in dots)
    for d in sorted(dotset):
        if not (1 <= d.row <= rows and 1 <= d.col <= cols):
            raise OutOfBounds(f"dot {d} lies outside the {rows}x{cols} grid", d)
    if Dot(1, 1) not in dotset:
        raise MissingRoot("the top-left cell (1,1) is empty")
    by_row, by_col = _lines(dotset)
    for d in sorted(dotset):
        if d == (1, 1):
            continue
        above = by_col[d.col][0] < d.row
        left = by_row[d.row][0] < d.col
        if above and left:
            raise AmbiguousDot(f"dot {d} has a dot above it and a dot to its left", d)
        if not (above or left):
            raise OrphanDot(f"dot {d} has no dot above it and none to its left", d)
    for i in range(1, rows + 1):
        if i not in by_row:
            raise EmptyRow(i)
    for j in range(1, cols + 1):
        if j not in by_col:
            raise EmptyCol(j)
    return NatGrid(rows, cols, dotset)


@dataclass(frozen=True)
class Cnat:
    """
    A complete non-ambiguous tree on an ``size x size`` grid.

    Build instances with :func:`validate_cnat`, :func:`cnat_from_dots` or
    :func:`from_matrix`; the constructor itself trusts its arguments.
    Equality and hashing only look at ``size`` and ``dots``.
    """

    size: int
    dots: frozenset[Dot]
    parent: dict[Dot, Dot] = field(compare=False, repr=False, hash=False)
    leaves: frozenset[Dot] = field(compare=False, repr=False, hash=False)

    @property
    def root(self) -> Dot:
        return Dot(1, 1)

    @property
    def internal(self) -> frozenset[Dot]:
        return self.dots - self.leaves

    def is_leaf(self, d: Dot) -> bool:
        return d in self.leaves

    def children(self, d: Dot) -> tuple[Dot, Dot] | None:
        """``(left_child, right_child)`` of an internal dot, None for a leaf."""
        if d in self.leaves:
            return None
        below = min(x for x in self.dots if x.col == d.col and x.row > d.row)
        right = min(x for x in self.dots if x.row == d.row and x.col > d.col)
        return below, right

    def rows(self) -> list[str]:
        """Matrix text rows, e.g. ``['11', '10']``."""
        grid = [["0"] * self.size for _ in range(self.size)]
        for r, c in self.dots:
            grid[r - 1][c - 1] = "1"
        return ["".join(line) for line in grid]

    def __str__(self) -> str:
        return "\n".join(self.rows())


def validate_cnat(grid: NatGrid) -> Cnat:
    """Promote a valid NAT to a CNAT, computing parents and leaves once."""
    by_row, by_col = _lines(grid.dots)
    parent: dict[Dot, Dot] = {}
    leaves = []
    for d in sorted(grid.dots):
        col_rows = by_col[d.col]
        row_cols = by_row[d.row]
        below = col_rows[-1] > d.row
        right = row_cols[-1] > d.col
        if below != right:
            what = "below it but none to its right" if below else "to its right but none below it"
            raise IncompleteDot(f"dot {d} has a dot {what}", d)
        if not below:
            leaves.append(d)
        if d == (1, 1):
            continue
        k = col_rows.index(d.row)
        if k > 0:
            parent[d] = Dot(col_rows[k - 1], d.col)
        else:
            parent[d] = Dot(d.row, row_cols[row_cols.index(d.col) - 1])
    n = len(leaves)
    if grid.rows != n or grid.cols != n:
        raise NotSquare(
            f"a CNAT with {n} leaves needs a {n}x{n} grid, got {grid.rows}x{grid.cols}"
        )
    return Cnat(n, grid.dots, parent, frozenset(leaves))


def cnat_from_dots(size: int, dots: Iterable[Sequence[int]]) -> Cnat:
    return validate_cnat(validate_nat(size, size, dots))


# -- matrices ---------------------------------------------------------------

def to_matrix(t: Cnat) -> np.ndarray:
    """The 0/1 matrix M(T) as a read-only ``uint8`` array."""
    m = np.zeros((t.size, t.size), dtype=np.uint8)
    for r, c in t.dots:
        m[r - 1, c - 1] = 1
    m.setflags(write=False)
    return m


def _as_rows(matrix) -> list[list[int]]:
    if isinstance(matrix, str):
        matrix = matrix.split()
    rows = []
    for line in matrix:
        if isinstance(line, str):
            line = line.strip()
            if set(line) - {"0", "1"}:
                raise ValueError(f"matrix row {line!r} contains characters other than 0/1")
            rows.append([int(ch) for ch in line])
        else:
            row = [int(x) for x in line]
            if set(row) - {0, 1}:
                raise ValueError(f"matrix row {row} contains entries other than 0/1")
            rows.append(row)
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix must be a non-empty rectangle")
    return rows


def from_matrix(matrix) -> Cnat:
    """
    Parse a square 0/1 matrix (array-like, or rows as ``'0'/'1'`` strings).

    >>> from_matrix(["11", "10"]).size
    2
    """
    rows = _as_rows(matrix)
    if len(rows) != len(rows[0]):
        raise ValueError(f"matrix is {len(rows)}x{len(rows[0])}, expected square")
    n = len(rows)
    dots = [(i + 1, j + 1) for i, row in enumerate(rows) for j, v in enumerate(row) if v]
    return validate_cnat(validate_nat(n, n, dots))


def matrix_determinant(matrix, bound: int = DETERMINANT_BOUND) -> int:
    """
    Exact integer determinant by fraction-free (Bareiss) elimination.

    >>> matrix_determinant([[1, 1], [1, 0]])
    -1
    """
    a = [[int(x) for x in row] for row in np.asarray(matrix).tolist()]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    if n > bound:
        raise OracleBoundExceeded(f"matrix of order {n} exceeds the determinant bound {bound}")
    if n == 0:
        return 1
    det_sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            det_sign = -det_sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return det_sign * a[n - 1][n - 1]


# -- permutations -----------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n`` in one-line notation."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"{word} is not a permutation of 1..{len(word)}")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Accept ``'45312'`` or whitespace/comma separated values."""
        parts = text.replace(",", " ").split()
        if len(parts) == 1 and len(parts[0]) > 1:
            parts = list(parts[0])
        return cls(tuple(int(p) for p in parts))

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __getitem__(self, i):
        return self.word[i]

    def __str__(self) -> str:
        sep = "" if len(self.word) < 10 else " "
        return sep.join(map(str, self.word))


def leaf_permutation(t: Cnat) -> Permutation:
    """Row ``i`` maps to the column of the unique leaf in row ``i``."""
    word = [0] * t.size
    for r, c in t.leaves:
        word[r - 1] = c
    return Permutation(tuple(word))


def inversions(perm: Permutation | Sequence[int]) -> int:
    w = tuple(perm)
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def sign(perm: Permutation | Sequence[int]) -> int:
    return -1 if inversions(perm) % 2 else 1
