"""
Leaf taxonomy and the maps between CNATs: the leaf switch, the
sign-reversing involution ``phi`` and the reduce/expand bijection between
all-short CNATs of size ``2p`` and CNATs of size ``p``.

A *left* leaf is the child below its parent (same column), a *right* leaf the
child to the right of its parent (same row). A leaf is *short* when it is in
the cell next to its parent, *long* otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (
    Cnat,
    CnatError,
    Dot,
    Permutation,
    cnat_from_dots,
)

__all__ = [
    "Side", "Reach", "LeafInfo", "InteractingPair",
    "NotInteracting", "SwitchFault", "NotAllShort", "OddSize",
    "classify_leaves", "is_all_short", "interacting_pairs", "switch",
    "active_pair", "phi", "reduce", "expand", "doubled_permutation",
]


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class Reach(enum.Enum):
    SHORT = "short"
    LONG = "long"


@dataclass(frozen=True)
class LeafInfo:
    dot: Dot
    side: Side
    reach: Reach
    parent: Dot | None  # None only for the root of the size-1 CNAT


@dataclass(frozen=True)
class InteractingPair:
    first: Dot
    second: Dot
    side: Side

    def key(self) -> tuple[int, int]:
        """The coordinates compared when picking the active pair."""
        if self.side is Side.LEFT:
            return self.first.row, self.second.row
        return self.first.col, self.second.col


class NotInteracting(CnatError):
    pass


class SwitchFault(RuntimeError):
    """A switch of interacting leaves produced an invalid grid (a bug)."""


class NotAllShort(CnatError):
    pass


class OddSize(CnatError):
    pass


def _leaf_info(t: Cnat, leaf: Dot) -> LeafInfo:
    p = t.parent.get(leaf)
    if p is None:
        # size 1: the root is its own leaf, counted as short
        return LeafInfo(leaf, Side.LEFT, Reach.SHORT, None)
    if p.col == leaf.col:
        side = Side.LEFT
        gap = leaf.row - p.row
    else:
        side = Side.RIGHT
        gap = leaf.col - p.col
    return LeafInfo(leaf, side, Reach.SHORT if gap == 1 else Reach.LONG, p)


def classify_leaves(t: Cnat) -> list[LeafInfo]:
    """One :class:`LeafInfo` per leaf, in row order."""
    return [_leaf_info(t, leaf) for leaf in sorted(t.leaves)]


def is_all_short(t: Cnat) -> bool:
    return all(info.reach is Reach.SHORT for info in classify_leaves(t))


def _axis(side: Side):
    return (lambda d: d.row) if side is Side.LEFT else (lambda d: d.col)


def _interacts(t: Cnat, l1: Dot, l2: Dot, side: Side) -> bool:
    x = _axis(side)
    p1, p2 = t.parent[l1], t.parent[l2]
    return x(p1) < x(l2) < x(l1) or x(p2) < x(l1) < x(l2)


def interacting_pairs(t: Cnat, side: Side) -> list[InteractingPair]:
    """
    Every ordered pair ``(l1, l2)`` of distinct interacting leaves on ``side``.

    The relation is symmetric, so each unordered pair shows up twice.
    """
    leaves = [i.dot for i in classify_leaves(t) if i.parent is not None and i.side is side]
    return [
        InteractingPair(a, b, side)
        for a in leaves
        for b in leaves
        if a != b and _interacts(t, a, b, side)
    ]


def switch(t: Cnat, l1: Dot, l2: Dot) -> Cnat:
    """
    Exchange the rows (left leaves) or columns (right leaves) of two
    interacting leaves.
    """
    l1, l2 = Dot(*l1), Dot(*l2)
    if l1 not in t.leaves or l2 not in t.leaves or l1 == l2 or t.size < 2:
        raise NotInteracting(f"{l1} and {l2} are not two distinct leaves")
    s1, s2 = _leaf_info(t, l1).side, _leaf_info(t, l2).side
    if s1 is not s2 or not _interacts(t, l1, l2, s1):
        raise NotInteracting(f"leaves {l1} and {l2} do not interact")
    if s1 is Side.LEFT:
        new1, new2 = Dot(l2.row, l1.col), Dot(l1.row, l2.col)
    else:
        new1, new2 = Dot(l1.row, l2.col), Dot(l2.row, l1.col)
    dots = (t.dots - {l1, l2}) | {new1, new2}
    try:
        return cnat_from_dots(t.size, dots)
    except CnatError as exc:
        raise SwitchFault(f"switching {l1} and {l2} broke the tree: {exc}") from exc


def active_pair(t: Cnat) -> InteractingPair | None:
    """
    The pair switched by :func:`phi`: left pairs take precedence, then the
    lexicographic maximum of ``(row(l1), row(l2))`` (columns for right pairs).
    """
    for side in (Side.LEFT, Side.RIGHT):
        pairs = interacting_pairs(t, side)
        if pairs:
            return max(pairs, key=InteractingPair.key)
    return None


def phi(t: Cnat) -> Cnat:
    pair = active_pair(t)
    if pair is None:
        return t
    return switch(t, pair.first, pair.second)


def reduce(t: Cnat) -> Cnat:
    """
    Delete each right leaf with its column and each left leaf with its row,
    then renumber the remaining rows and columns in order.
    """
    if t.size % 2:
        raise OddSize(f"reduce needs an even size, got {t.size}")
    infos = classify_leaves(t)
    if not all(i.reach is Reach.SHORT for i in infos):
        raise NotAllShort("reduce needs a CNAT whose leaves are all short")
    gone_rows = {i.dot.row for i in infos if i.side is Side.LEFT}
    gone_cols = {i.dot.col for i in infos if i.side is Side.RIGHT}
    keep_rows = {r: k for k, r in enumerate(sorted(set(range(1, t.size + 1)) - gone_rows), 1)}
    keep_cols = {c: k for k, c in enumerate(sorted(set(range(1, t.size + 1)) - gone_cols), 1)}
    dots = [(keep_rows[d.row], keep_cols[d.col]) for d in t.internal]
    return cnat_from_dots(t.size // 2, dots)


def expand(t: Cnat) -> Cnat:
    """
    Give every leaf two short leaf children, inserting a fresh row just below
    and a fresh column just right of it.
    """
    # new index of old row r: r plus one per leaf row strictly above it
    leaf_rows = sorted(d.row for d in t.leaves)
    leaf_cols = sorted(d.col for d in t.leaves)
    row_map = {r: r + sum(1 for x in leaf_rows if x < r) for r in range(1, t.size + 1)}
    col_map = {c: c + sum(1 for x in leaf_cols if x < c) for c in range(1, t.size + 1)}
    dots = []
    for d in t.dots:
        r, c = row_map[d.row], col_map[d.col]
        dots.append((r, c))
        if d in t.leaves:
            dots.append((r + 1, c))
            dots.append((r, c + 1))
    return cnat_from_dots(2 * t.size, dots)


def doubled_permutation(perm: Permutation) -> Permutation:
    """
    >>> str(doubled_permutation(Permutation((2, 3, 1))))
    '436521'
    """
    word = []
    for v in perm:
        word += [2 * v, 2 * v - 1]
    return Permutation(tuple(word))
