"""
Text serialisations of a CNAT.

matrix
    ``n`` lines of ``n`` characters from ``{0,1}``, row 1 first, each line
    newline-terminated. In a stream, consecutive matrices are separated by a
    blank line.
record
    One JSON object per line: ``{"size": n, "dots": [[r, c], ...]}`` with the
    dots sorted lexicographically.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator

from .core import Cnat, NatGrid, cnat_from_dots, validate_nat

__all__ = [
    "FormatError", "to_text", "to_record", "from_record", "dumps",
    "parse_grid", "parse_one", "parse_many",
]


class FormatError(ValueError):
    """Input is not well-formed matrix text or record JSON."""


def to_text(t: Cnat) -> str:
    return "".join(line + "\n" for line in t.rows())


def to_record(t: Cnat) -> dict:
    return {"size": t.size, "dots": [[r, c] for r, c in sorted(t.dots)]}


def dumps(t: Cnat, fmt: str = "matrix") -> str:
    if fmt == "matrix":
        return to_text(t)
    if fmt == "record":
        return json.dumps(to_record(t)) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _record_dots(obj) -> tuple[int, list[tuple[int, int]]]:
    try:
        size = int(obj["size"])
        dots = [(int(r), int(c)) for r, c in obj["dots"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed record: {exc}") from exc
    return size, dots


def from_record(obj: dict | str) -> Cnat:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise FormatError(f"malformed record: {exc}") from exc
    size, dots = _record_dots(obj)
    return cnat_from_dots(size, dots)


def _matrix_block(lines: list[str]) -> tuple[int, int, list[tuple[int, int]]]:
    width = len(lines[0])
    for line in lines:
        if len(line) != width or set(line) - {"0", "1"}:
            raise FormatError(f"bad matrix line {line!r}")
    dots = [(i, j) for i, line in enumerate(lines, 1) for j, ch in enumerate(line, 1) if ch == "1"]
    return len(lines), width, dots


def parse_grid(text: str) -> NatGrid:
    """
    Read one (possibly rectangular) grid as a NAT; CNAT checks are left to the
    caller. Records are accepted too.
    """
    text = text.strip()
    if not text:
        raise FormatError("empty input")
    if text.startswith("{"):
        try:
            size, dots = _record_dots(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormatError(f"malformed record: {exc}") from exc
        return validate_nat(size, size, dots)
    rows, cols, dots = _matrix_block(text.split())
    return validate_nat(rows, cols, dots)


def _blocks(text: str) -> Iterator[str]:
    block: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("{"):
            if block:
                yield "\n".join(block)
                block = []
            yield line
        elif line:
            block.append(line)
        elif block:
            yield "\n".join(block)
            block = []
    if block:
        yield "\n".join(block)


def parse_many(text: str) -> Iterator[Cnat]:
    """CNATs from a stream of matrix blocks and/or record lines."""
    for chunk in _blocks(text):
        if chunk.startswith("{"):
            yield from_record(chunk)
        else:
            rows, cols, dots = _matrix_block(chunk.split())
            if rows != cols:
                raise FormatError(f"matrix is {rows}x{cols}, expected square")
            yield cnat_from_dots(rows, dots)


def parse_one(text: str) -> Cnat:
    found = list(_blocks(text))
    if len(found) != 1:
        raise FormatError(f"expected exactly one CNAT, found {len(found)}")
    return next(parse_many(text))


def write_stream(ts: Iterable[Cnat], fmt: str = "matrix") -> Iterator[str]:
    """Chunks of a stream; matrix blocks get a blank separator line."""
    first = True
    for t in ts:
        if fmt == "matrix" and not first:
            yield "\n"
        yield dumps(t, fmt)
        first = False
