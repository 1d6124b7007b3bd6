"""Reference Minkowski sum straight from the definition: hull of all
pairwise vertex sums.

Accepts raw point lists as well as polytopes, so degenerate summands
(segments, single points) can be summed too.
"""

from __future__ import annotations

from typing import Sequence, Union

from .errors import DimensionMismatch
from .linalg import as_vector
from .polytope import Polytope, from_vertices

Summand = Union[Polytope, Sequence[Sequence]]


def _points(x: Summand) -> list[tuple]:
    if isinstance(x, Polytope):
        return list(x.vertices)
    return [as_vector(p) for p in x]


def oracle_sum(A: Summand, B: Summand) -> Polytope:
    pa, pb = _points(A), _points(B)
    if not pa or not pb:
        raise ValueError("empty summand")
    dims = {len(p) for p in pa} | {len(p) for p in pb}
    if len(dims) != 1:
        raise DimensionMismatch(f"mixed dimensions {sorted(dims)}")
    dim = dims.pop()
    return from_vertices(dim, {tuple(x + y for x, y in zip(a, b)) for a in pa for b in pb})


def oracle_membership(A: Summand, B: Summand, x: Sequence) -> bool:
    return oracle_sum(A, B).contains(as_vector(x))
