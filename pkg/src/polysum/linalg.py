"""Exact rational scalars, vectors and small dense linear algebra.

Vectors are plain tuples of :class:`fractions.Fraction` (or ``int``, which
mixes exactly with ``Fraction``).  Integer-valued directions (rays, facet
normals) are kept as tuples of ``int`` in lowest terms.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NoSolution, Underdetermined

Rational = Fraction
Vector = tuple

_RATIONAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?(/[+-]?\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse an integer, finite decimal or ``p/q`` literal exactly."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(num) / Fraction(den)
    return Fraction(s)


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_vector(coords: Iterable) -> tuple:
    return tuple(Fraction(c) for c in coords)


def _check(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise DimensionMismatch(f"dimension {len(u)} != {len(v)}")


def dot(u: Sequence, v: Sequence):
    _check(u, v)
    return sum((a * b for a, b in zip(u, v)), 0)


def add(u: Sequence, v: Sequence) -> tuple:
    _check(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> tuple:
    _check(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(k, u: Sequence) -> tuple:
    return tuple(k * a for a in u)


def is_zero(u: Sequence) -> bool:
    return all(a == 0 for a in u)


def integer_direction(v: Sequence) -> tuple[int, ...]:
    """Positive multiple of ``v`` with coprime integer coordinates."""
    fr = [Fraction(a) for a in v]
    m = lcm(*(a.denominator for a in fr)) if fr else 1
    ints = [int(a * m) for a in fr]
    g = gcd(*ints)
    if g == 0:
        return tuple(ints)
    return tuple(a // g for a in ints)


def canonical_line(v: Sequence) -> tuple[int, ...]:
    """Like :func:`integer_direction` but with the first nonzero entry positive."""
    d = integer_direction(v)
    for a in d:
        if a:
            return d if a > 0 else tuple(-x for x in d)
    return d


def _integer_rows(rows: Iterable[Sequence]) -> list[list[int]]:
    out = []
    for r in rows:
        fr = [Fraction(a) for a in r]
        m = lcm(*(a.denominator for a in fr)) if fr else 1
        out.append([int(a * m) for a in fr])
    return out


def rank(rows: Iterable[Sequence]) -> int:
    """Exact rank by fraction-free (Bareiss) elimination."""
    m = _integer_rows(rows)
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    if any(len(r) != ncols for r in m):
        raise DimensionMismatch("ragged matrix")
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            mi = m[i]
            f = mi[c]
            mr = m[r]
            for j in range(c, ncols):
                mi[j] = (p * mi[j] - f * mr[j]) // prev
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def rref(rows: Iterable[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals and its pivot columns."""
    m = [[Fraction(a) for a in r] for r in rows]
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [a / p for a in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def solve_linear(rows: Sequence[Sequence], rhs: Sequence) -> tuple:
    """Solve ``rows @ x = rhs`` exactly.

    Raises :class:`NoSolution` for an inconsistent system and
    :class:`Underdetermined` when the solution is not unique.
    """
    if len(rows) != len(rhs):
        raise DimensionMismatch(f"{len(rows)} rows but rhs of length {len(rhs)}")
    if not rows:
        raise Underdetermined("empty system")
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if n in pivots:
        raise NoSolution("inconsistent system")
    if len(pivots) < n:
        raise Underdetermined(f"rank {len(pivots)} < {n} unknowns")
    x = [Fraction(0)] * n
    for row, c in zip(red, pivots):
        x[c] = row[n]
    return tuple(x)


def nullspace(rows: Sequence[Sequence], dim: int | None = None) -> list[tuple[int, ...]]:
    """Integer basis of ``{x : rows @ x = 0}``, canonical for the subspace."""
    if dim is None:
        if not rows:
            raise ValueError("dimension needed for an empty matrix")
        dim = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * dim
        x[f] = Fraction(1)
        for row, c in zip(red, pivots):
            x[c] = -row[f]
        basis.append(x)
    return subspace_basis(basis, dim)


def subspace_basis(vectors: Iterable[Sequence], dim: int) -> list[tuple[int, ...]]:
    """Canonical integer basis (scaled RREF rows) of the span of ``vectors``."""
    vs = [v for v in vectors]
    if not vs:
        return []
    red, _ = rref(vs)
    return [canonical_line(r) for r in red]


def orthogonal_project(v: Sequence, basis: Sequence[Sequence]) -> tuple:
    """Component of ``v`` orthogonal to ``span(basis)``."""
    if not basis:
        return tuple(Fraction(a) for a in v)
    k = len(basis)
    gram = [[dot(basis[i], basis[j]) for j in range(k)] for i in range(k)]
    coeffs = solve_linear(gram, [dot(b, v) for b in basis])
    out = [Fraction(a) for a in v]
    for c, b in zip(coeffs, basis):
        out = [x - c * y for x, y in zip(out, b)]
    return tuple(out)
