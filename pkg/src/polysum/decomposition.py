"""Result type shared by the summation algorithms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DimensionMismatch, InternalInconsistency
from .polytope import HalfSpace, Polytope, validate_double_description


@dataclass(frozen=True)
class MinkowskiDecomposition:
    """A sum polytope plus, per vertex, the summand vertex indices producing it.

    ``witnesses[i] == (ia, ib)`` means ``sum.vertices[i] == A.vertices[ia] +
    B.vertices[ib]``.  ``cone_operations`` counts cone intersections (dual
    methods) or hull-cone constructions (primal method).
    """

    sum: Polytope
    witnesses: tuple[tuple[int, int], ...]
    method: str
    cone_operations: int = 0

    def same_polytope(self, other) -> bool:
        q = other.sum if isinstance(other, MinkowskiDecomposition) else other
        return self.sum == q


def check_summands(A: Polytope, B: Polytope) -> None:
    if A.dim != B.dim:
        raise DimensionMismatch(f"summands live in R^{A.dim} and R^{B.dim}")


def vertex_sum(A: Polytope, B: Polytope, ia: int, ib: int) -> tuple[Fraction, ...]:
    return tuple(x + y for x, y in zip(A.vertices[ia], B.vertices[ib]))


def assemble(
    dim: int,
    witnesses: dict[tuple, tuple[int, int]],
    facets: Iterable[HalfSpace],
    method: str,
    cone_operations: int,
    error: type[InternalInconsistency] = InternalInconsistency,
) -> MinkowskiDecomposition:
    """Build the sum polytope from collected vertices/facets and validate it."""
    p = Polytope.from_double_description(dim, facets, witnesses)
    problems = validate_double_description(p)
    if problems:
        shown = "; ".join(problems[:5])
        more = f" (+{len(problems) - 5} more)" if len(problems) > 5 else ""
        raise error(f"{method}: assembled sum is inconsistent: {shown}{more}")
    return MinkowskiDecomposition(p, tuple(witnesses[v] for v in p.vertices), method, cone_operations)
