"""ASCII and TikZ drawings of a CNAT. Neither output is meant to be parsed back."""

from __future__ import annotations

from collections.abc import Iterable

from .core import Cnat, Dot

__all__ = ["ascii_grid", "tikz"]

INTERNAL = "●"
LEAF = "○"
EMPTY = "·"


def ascii_grid(t: Cnat) -> str:
    """
    Dots on a character canvas, with parent links drawn as ``│`` and ``─``.

    >>> from cnat import from_matrix
    >>> print(ascii_grid(from_matrix(["11", "10"])))
    ●─○
    │
    ○ ·
    """
    n = t.size
    h = w = 2 * n - 1
    canvas = [[" "] * w for _ in range(h)]
    for i in range(n):
        for j in range(n):
            canvas[2 * i][2 * j] = EMPTY
    for d, p in t.parent.items():
        if d.col == p.col:
            for y in range(2 * (p.row - 1) + 1, 2 * (d.row - 1)):
                canvas[y][2 * (d.col - 1)] = "│"
        else:
            for x in range(2 * (p.col - 1) + 1, 2 * (d.col - 1)):
                canvas[2 * (d.row - 1)][x] = "─"
    for d in t.dots:
        canvas[2 * (d.row - 1)][2 * (d.col - 1)] = LEAF if d in t.leaves else INTERNAL
    return "\n".join("".join(line).rstrip() for line in canvas)


def tikz(t: Cnat, highlight: Iterable[Dot] = (), scale: float = 0.35) -> str:
    """
    A ``tikzpicture`` in the usual CNAT drawing style: unit cells of side 2,
    internal dots black, leaves blue and ``highlight`` dots red.
    """
    marked = {Dot(*d) for d in highlight}
    n = t.size

    def xy(d: Dot) -> tuple[int, int]:
        return 1 + 2 * d.col, 3 - 2 * d.row

    out = [
        r"\providecommand{\tdot}[3]{\fill[#3] (#1,#2) circle (0.4);}",
        rf"\begin{{tikzpicture}}[scale={scale}]",
        rf"\draw [step=2] (2,2) grid ({2 + 2 * n},{2 - 2 * n});",
    ]
    for d, p in sorted(t.parent.items()):
        (x0, y0), (x1, y1) = xy(p), xy(d)
        out.append(rf"\draw [thick] ({x0},{y0})--({x1},{y1});")
    for d in sorted(t.dots):
        color = "red" if d in marked else "blue" if d in t.leaves else "black"
        x, y = xy(d)
        out.append(rf"\tdot{{{x}}}{{{y}}}{{{color}}}")
    out.append(r"\end{tikzpicture}")
    return "\n".join(out)
