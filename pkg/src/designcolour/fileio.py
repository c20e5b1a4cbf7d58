"""Line-oriented text format for designs, groupings and colourings.

The grammar (UTF-8, '#' starts a comment, blank lines ignored):

    design v=<int> k=<int> lambda=<int>
    block: p1 p2 ... pk          (one line per block, ascending points)
    group: p1 p2 ...             (optional; groups must partition the points)
    colouring c=<int>            (optional, followed by colour lines)
    colour: <point> <colour>     (one line per point, ascending points)

A standalone colouring file is the `colouring c=<int>` header followed by
bare `<point> <colour>` lines.  Rendering a parsed file reproduces it
byte for byte when the input was canonical.
"""
from __future__ import annotations

import re
from typing import Optional

from .colouring import Colouring
from .core import Design, DesignError, Grouping


class ParseError(DesignError):
    def __init__(self, line_no: int, msg: str):
        super().__init__(f"line {line_no}: {msg}")
        self.line_no = line_no


_DESIGN_RE = re.compile(r"design v=(\d+) k=(\d+) lambda=(\d+)$")
_COLOURING_RE = re.compile(r"colouring c=(\d+)$")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _ints(line_no: int, text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise ParseError(line_no, f"expected integers, got {text!r}") from None


def parse_design(text: str) -> tuple[Design, Optional[Grouping], Optional[Colouring]]:
    """Parse a design file; raises ParseError with a line number on bad input."""
    header = None
    blocks: list[tuple[int, ...]] = []
    groups: list[tuple[int, ...]] = []
    colour_c: Optional[int] = None
    colour_lines: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if line.startswith("design "):
            if header is not None:
                raise ParseError(line_no, "duplicate design header")
            m = _DESIGN_RE.match(line)
            if not m:
                raise ParseError(line_no, "malformed design header")
            header = tuple(int(x) for x in m.groups())
        elif line.startswith("block:"):
            if header is None:
                raise ParseError(line_no, "block before design header")
            pts = _ints(line_no, line[len("block:"):])
            if len(set(pts)) != len(pts):
                raise ParseError(line_no, "duplicate point in block")
            if any(p < 0 or p >= header[0] for p in pts):
                raise ParseError(line_no, f"point out of range [0, {header[0]})")
            if pts != sorted(pts):
                raise ParseError(line_no, "block points must be ascending")
            blocks.append(tuple(pts))
        elif line.startswith("group:"):
            if header is None:
                raise ParseError(line_no, "group before design header")
            pts = _ints(line_no, line[len("group:"):])
            if any(p < 0 or p >= header[0] for p in pts):
                raise ParseError(line_no, f"point out of range [0, {header[0]})")
            groups.append(tuple(pts))
        elif _COLOURING_RE.match(line):
            if colour_c is not None:
                raise ParseError(line_no, "duplicate colouring header")
            colour_c = int(_COLOURING_RE.match(line).group(1))
        elif line.startswith("colour:"):
            if colour_c is None:
                raise ParseError(line_no, "colour line before colouring header")
            vals = _ints(line_no, line[len("colour:"):])
            if len(vals) != 2:
                raise ParseError(line_no, "colour line needs point and colour")
            colour_lines.append((vals[0], vals[1]))
        else:
            raise ParseError(line_no, f"unrecognized line {line!r}")
    if header is None:
        raise ParseError(1, "missing design header")
    v, k, lam = header
    try:
        design = Design(v, tuple(blocks), lam)
    except DesignError as exc:
        raise ParseError(1, str(exc)) from None
    if design.blocks and design.k != k:
        raise ParseError(1, f"header k={k} but the least block size is {design.k}")
    grouping = None
    if groups:
        try:
            grouping = Grouping(v, tuple(groups))
        except DesignError as exc:
            raise ParseError(1, str(exc)) from None
    colouring = None
    if colour_c is not None:
        colouring = _colouring_from_lines(v, colour_c, colour_lines)
    return design, grouping, colouring


def _colouring_from_lines(v: int, c: int, lines: list[tuple[int, int]]) -> Colouring:
    if [p for p, _ in lines] != list(range(v)):
        raise ParseError(1, "colour lines must list every point once, ascending")
    try:
        return Colouring(c, tuple(col for _, col in lines))
    except DesignError as exc:
        raise ParseError(1, str(exc)) from None


def render_design(
    design: Design,
    grouping: Optional[Grouping] = None,
    colouring: Optional[Colouring] = None,
) -> str:
    """Canonical text for a design; the exact inverse of parse_design."""
    out = [f"design v={design.v} k={design.k} lambda={design.lambda_}"]
    for blk in design.blocks:
        out.append("block: " + " ".join(str(p) for p in blk))
    if grouping is not None:
        for grp in grouping.groups:
            out.append("group: " + " ".join(str(p) for p in grp))
    if colouring is not None:
        out.append(f"colouring c={colouring.c}")
        for p, col in enumerate(colouring.assignment):
            out.append(f"colour: {p} {col}")
    return "\n".join(out) + "\n"


def parse_colouring(text: str) -> Colouring:
    """Parse a standalone colouring file: header then `<point> <colour>` lines."""
    c = None
    lines: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        m = _COLOURING_RE.match(line)
        if m:
            if c is not None:
                raise ParseError(line_no, "duplicate colouring header")
            c = int(m.group(1))
            continue
        if c is None:
            raise ParseError(line_no, "missing colouring header")
        vals = _ints(line_no, line)
        if len(vals) != 2:
            raise ParseError(line_no, "expected `<point> <colour>`")
        lines.append((vals[0], vals[1]))
    if c is None:
        raise ParseError(1, "missing colouring header")
    return _colouring_from_lines(len(lines), c, lines)


def render_colouring(colouring: Colouring) -> str:
    out = [f"colouring c={colouring.c}"]
    for p, col in enumerate(colouring.assignment):
        out.append(f"{p} {col}")
    return "\n".join(out) + "\n"
