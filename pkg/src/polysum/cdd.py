"""Reading and writing cdd-style ``.ine`` / ``.ext`` polyhedron files.

H rows ``b a_1 ... a_n`` mean ``b + <a, x> >= 0``; V rows ``1 v_1 ... v_n``
are points (rays, with a leading 0, are rejected).  Numbers are read
exactly; output uses integers or ``p/q`` literals, never decimals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParseError, RayNotSupported
from .linalg import format_rational, parse_rational
from .polytope import HalfSpace, Polytope, from_halfspaces, from_vertices

NUMBER_TYPES = ("integer", "rational", "real")


@dataclass(frozen=True)
class PolyhedronFile:
    representation: str  # "H" or "V"
    dim: int
    rows: tuple[tuple[Fraction, ...], ...]
    number_type: str = "rational"

    def halfspaces(self) -> list[HalfSpace]:
        if self.representation != "H":
            raise ValueError("not an H-representation")
        return [HalfSpace.make(tuple(-a for a in r[1:]), r[0]) for r in self.rows]

    def points(self) -> list[tuple[Fraction, ...]]:
        if self.representation != "V":
            raise ValueError("not a V-representation")
        return [r[1:] for r in self.rows]

    def to_polytope(self) -> Polytope:
        if self.representation == "H":
            return from_halfspaces(self.dim, self.halfspaces())
        return from_vertices(self.dim, self.points())


def _tokens(line: str):
    """``(token, 1-based column)`` pairs of a whitespace-separated line."""
    col = 0
    for part in line.split():
        col = line.index(part, col)
        yield part, col + 1
        col += len(part)


def parse_file(text: str) -> PolyhedronFile:
    lines = text.splitlines()
    rep = None
    i = 0
    # free-form preamble up to "begin"
    while i < len(lines):
        s = lines[i].strip()
        i += 1
        low = s.lower()
        if not s or s.startswith("*"):
            continue
        if low == "h-representation":
            rep = "H"
        elif low == "v-representation":
            rep = "V"
        elif low.startswith("linearity"):
            raise ParseError("linearity (equality rows) is not supported", i, 1)
        elif low == "begin":
            break
    else:
        raise ParseError("missing 'begin'", len(lines) or None)
    rep = rep or "H"

    def next_line():
        nonlocal i
        while i < len(lines):
            raw = lines[i]
            i += 1
            if raw.strip() and not raw.strip().startswith("*"):
                return raw
        raise ParseError("unexpected end of file (missing 'end')", len(lines))

    header = next_line()
    toks = list(_tokens(header))
    if len(toks) != 3:
        raise ParseError("expected '<rows> <columns> <number type>'", i, 1)
    try:
        m, d = int(toks[0][0]), int(toks[1][0])
    except ValueError:
        raise ParseError("row and column counts must be integers", i, toks[0][1]) from None
    ntype = toks[2][0].lower()
    if ntype not in NUMBER_TYPES:
        raise ParseError(f"unknown number type {toks[2][0]!r}", i, toks[2][1])
    if m < 0 or d < 2:
        raise ParseError(f"bad matrix size {m} x {d}", i, 1)

    rows = []
    for _ in range(m):
        raw = next_line()
        toks = list(_tokens(raw))
        if len(toks) != d:
            raise ParseError(f"expected {d} numbers, found {len(toks)}", i, 1)
        row = []
        for tok, col in toks:
            try:
                x = parse_rational(tok)
            except ValueError:
                raise ParseError(f"bad number {tok!r}", i, col) from None
            if ntype == "integer" and x.denominator != 1:
                raise ParseError(f"non-integer {tok!r} in an integer matrix", i, col)
            row.append(x)
        if rep == "V":
            if row[0] == 0:
                raise RayNotSupported("rays (leading 0) are not supported for polytopes", i, toks[0][1])
            if row[0] != 1:
                raise ParseError("V rows must start with 1", i, toks[0][1])
        rows.append(tuple(row))
    tail = next_line()
    if tail.strip().lower() != "end":
        raise ParseError(f"expected 'end', found {tail.strip()!r}", i, 1)
    return PolyhedronFile(rep, d - 1, tuple(rows), ntype)


def _number_type(rows: Iterable[Sequence[Fraction]]) -> str:
    return "integer" if all(Fraction(x).denominator == 1 for r in rows for x in r) else "rational"


def format_file(pf: PolyhedronFile, comments: Sequence[str] = (), trailer: Sequence[str] = ()) -> str:
    out = [f"* {c}" for c in comments]
    out.append("H-representation" if pf.representation == "H" else "V-representation")
    out.append("begin")
    out.append(f" {len(pf.rows)} {pf.dim + 1} {_number_type(pf.rows)}")
    for r in pf.rows:
        out.append(" " + " ".join(format_rational(x) for x in r))
    out.append("end")
    out.extend(f"* {c}" for c in trailer)
    return "\n".join(out) + "\n"


def polytope_file(p: Polytope, representation: str) -> PolyhedronFile:
    rep = representation.upper()
    if rep == "H":
        rows = [(Fraction(h.offset),) + tuple(Fraction(-a) for a in h.normal) for h in p.facets]
    elif rep == "V":
        rows = [(Fraction(1),) + tuple(v) for v in p.vertices]
    else:
        raise ValueError(f"representation must be H or V, not {representation!r}")
    return PolyhedronFile(rep, p.dim, tuple(rows), _number_type(rows))


def write_file(p: Polytope, representation: str, comments: Sequence[str] = (), trailer: Sequence[str] = ()) -> str:
    """Canonical text of ``p`` in the requested representation."""
    return format_file(polytope_file(p, representation), comments, trailer)
