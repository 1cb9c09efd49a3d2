"""
Command-line entry point.

Exit status: 0 on success, 1 on a domain failure (invalid tree, failed
precondition, theorem mismatch), 2 on a usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from . import enumeration, formats, render
from .core import CnatError, leaf_permutation, sign, validate_cnat
from .enumeration import BoundExceeded, Verdict
from .formats import FormatError
from .transform import (
    NotAllShort,
    OddSize,
    active_pair,
    classify_leaves,
    expand,
    phi,
    reduce,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _describe(exc: CnatError) -> str:
    where = f" at {exc.dot}" if exc.dot is not None else ""
    return f"{exc.name}{where}: {exc}"


def _shape_chunk(args: tuple) -> str:
    shape, fmt = args
    return "".join(
        ("\n" if fmt == "matrix" else "") + formats.dumps(t, fmt)
        for t in enumeration._shape_cnats(shape)
    )


def cmd_enum(ns) -> int:
    enumeration._check_size(ns.n, ns.bound)
    out = sys.stdout
    if ns.jobs > 1:
        shapes = enumeration._shapes(ns.n)
        with ProcessPoolExecutor(max_workers=ns.jobs) as pool:
            chunks = pool.map(_shape_chunk, [(s, ns.format) for s in shapes])
            text = "".join(chunks)
        # each chunk starts with a separator; drop the very first one
        out.write(text[1:] if ns.format == "matrix" else text)
    else:
        for chunk in formats.write_stream(enumeration.enumerate_cnats(ns.n, ns.bound), ns.format):
            out.write(chunk)
    return EXIT_OK


def cmd_count(ns) -> int:
    c = enumeration.count_by_sign(ns.n, ns.bound, ns.jobs)
    print(f"T_{ns.n}={c.total}")
    print(f"T({ns.n};+1)={c.plus}")
    print(f"T({ns.n};-1)={c.minus}")
    return EXIT_OK


def cmd_verify(ns) -> int:
    report = enumeration.verify_theorem(ns.n, ns.bound, ns.jobs)
    print("\n".join(report.lines()))
    return EXIT_FAIL if report.verdict is Verdict.FAIL else EXIT_OK


def cmd_phi(ns) -> int:
    t = formats.parse_one(_read(ns.file))
    pair = active_pair(t)
    sys.stdout.write(formats.dumps(phi(t), ns.format))
    if pair is None:
        print("fixed point", file=sys.stderr)
    else:
        print(f"active pair: {pair.side.value} leaves {pair.first} {pair.second}", file=sys.stderr)
    return EXIT_OK


def cmd_reduce(ns) -> int:
    t = formats.parse_one(_read(ns.file))
    sys.stdout.write(formats.dumps(reduce(t), ns.format))
    return EXIT_OK


def cmd_expand(ns) -> int:
    t = formats.parse_one(_read(ns.file))
    sys.stdout.write(formats.dumps(expand(t), ns.format))
    return EXIT_OK


def cmd_show(ns) -> int:
    t = formats.parse_one(_read(ns.file))
    print(render.ascii_grid(t))
    if ns.tikz:
        pair = active_pair(t)
        marked = () if pair is None else (pair.first, pair.second)
        print(render.tikz(t, highlight=marked if ns.active else ()))
    return EXIT_OK


def _check_one(chunk: str) -> bool:
    try:
        grid = formats.parse_grid(chunk)
    except CnatError as exc:
        print(f"not a NAT: {_describe(exc)}")
        return False
    try:
        t = validate_cnat(grid)
    except CnatError as exc:
        print(f"NAT {grid.rows}x{grid.cols}, not a CNAT: {_describe(exc)}")
        return False
    perm = leaf_permutation(t)
    print(f"CNAT size {t.size}, π = {perm}, sign {sign(perm):+d}")
    for info in classify_leaves(t):
        parent = "none" if info.parent is None else str(info.parent)
        print(f"  leaf {info.dot} {info.side.value} {info.reach.value} parent {parent}")
    return True


def cmd_check(ns) -> int:
    chunks = list(formats._blocks(_read(ns.file)))
    if not chunks:
        raise FormatError("empty input")
    ok = [_check_one(chunk) for chunk in chunks]
    return EXIT_OK if all(ok) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cnat", description="Complete non-ambiguous trees.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def sized(name, help_, func, jobs=True):
        p = sub.add_parser(name, help=help_)
        p.add_argument("n", type=int)
        p.add_argument("--bound", type=int, default=None,
                       help=f"largest size accepted (default ${enumeration.BOUND_ENV} "
                            f"or {enumeration.DEFAULT_BOUND})")
        if jobs:
            p.add_argument("--jobs", type=int, default=1,
                           help="worker processes (output order stays canonical)")
        p.set_defaults(func=func)
        return p

    def on_file(name, help_, func, fmt=True):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", nargs="?", default=None, help="input path, default stdin")
        if fmt:
            p.add_argument("--format", choices=("matrix", "record"), default="matrix")
        p.set_defaults(func=func)
        return p

    p = sized("enum", "stream every CNAT of size n", cmd_enum)
    p.add_argument("--format", choices=("matrix", "record"), default="matrix")
    sized("count", "print T_n and the sign tally", cmd_count)
    sized("verify", "check the determinant parity theorem at size n", cmd_verify)
    on_file("phi", "apply the sign-reversing involution", cmd_phi)
    on_file("reduce", "drop the short leaves of an all-short CNAT", cmd_reduce)
    on_file("expand", "give every leaf two short leaves", cmd_expand)
    p = on_file("show", "draw a CNAT", cmd_show, fmt=False)
    p.add_argument("--tikz", action="store_true", help="also print a TikZ picture")
    p.add_argument("--active", action="store_true", help="colour the active pair red in TikZ")
    on_file("check", "validate grids and report permutation, sign and leaves", cmd_check, fmt=False)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except (FormatError, BoundExceeded, OSError) as exc:
        print(f"cnat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotAllShort, OddSize, CnatError) as exc:
        print(f"cnat: {_describe(exc)}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
