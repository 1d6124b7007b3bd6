"""Minkowski sums by walking the primal cones of the sum.

At a sum vertex ``c = a + b`` the cone of the sum is the convex hull of the
two summand primal cones moved to ``c``.  Each extreme ray of that hull is
an edge of the sum, parallel to an edge of A, of B, or of both; stepping
along the matching summand edge(s) gives the neighbouring decomposition.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Sequence

from .cones import Cone, convex_hull_of_cones, primal_cone
from .decomposition import MinkowskiDecomposition, assemble, check_summands, vertex_sum
from .errors import NoParallelEdge, NotMinkowskiVertex, TraversalIncomplete
from .linalg import integer_direction
from .polytope import HalfSpace, Polytope


def _unique_argmax(P: Polytope, u: Sequence) -> int | None:
    vals = [sum(x * y for x, y in zip(u, v)) for v in P.vertices]
    best = max(vals)
    hits = [i for i, x in enumerate(vals) if x == best]
    return hits[0] if len(hits) == 1 else None


def seed_minkowski_vertex(
    A: Polytope, B: Polytope, direction: Sequence | None = None, seed: int = 0
) -> tuple[int, int]:
    """A vertex pair maximizing one generic linear functional on A and on B.

    ``direction`` is tried first; when it ties on either summand, integer
    directions are drawn from ``random.Random(seed)`` with growing range.
    """
    check_summands(A, B)
    if direction is not None:
        ia, ib = _unique_argmax(A, direction), _unique_argmax(B, direction)
        if ia is not None and ib is not None:
            return ia, ib
    rng = random.Random(seed)
    bound = 8
    while True:
        for _ in range(32):
            u = [rng.randint(-bound, bound) for _ in range(A.dim)]
            if not any(u):
                continue
            ia, ib = _unique_argmax(A, u), _unique_argmax(B, u)
            if ia is not None and ib is not None:
                return ia, ib
        bound *= 4


class _Walker:
    """Caches primal and hull cones over one traversal."""

    def __init__(self, A: Polytope, B: Polytope):
        self.A, self.B = A, B
        self._primal_a: dict[int, Cone] = {}
        self._primal_b: dict[int, Cone] = {}
        self._hull: dict[tuple[int, int], Cone] = {}
        self.hull_count = 0

    def hull(self, a: int, b: int) -> Cone:
        key = (a, b)
        if key not in self._hull:
            if a not in self._primal_a:
                self._primal_a[a] = primal_cone(self.A, a)
            if b not in self._primal_b:
                self._primal_b[b] = primal_cone(self.B, b)
            ca, cb = self._primal_a[a], self._primal_b[b]
            c = vertex_sum(self.A, self.B, a, b)
            self._hull[key] = convex_hull_of_cones(ca.with_apex(c), cb.with_apex(c), c)
            self.hull_count += 1
        return self._hull[key]

    def vertex_cone(self, a: int, b: int) -> Cone:
        h = self.hull(a, b)
        if not h.pointed:
            raise NotMinkowskiVertex(
                f"A[{a}] + B[{b}] is not a vertex of the sum (hull cone contains a line)"
            )
        return h

    def neighbour(self, a: int, b: int, edge_dir: Sequence) -> tuple[int, int]:
        d = integer_direction(edge_dir)
        na = self.A.edges[a].get(d)
        nb = self.B.edges[b].get(d)
        candidates = []
        if na is not None and nb is not None:
            candidates.append((na, nb))
        if na is not None:
            candidates.append((na, b))
        if nb is not None:
            candidates.append((a, nb))
        if not candidates:
            raise NoParallelEdge(f"direction {d} at A[{a}] + B[{b}] matches no summand edge")
        for pair in candidates:
            if self.hull(*pair).pointed:
                return pair
        raise NoParallelEdge(f"no candidate along {d} from A[{a}] + B[{b}] is a sum vertex")


def minkowski_vertex_cone(A: Polytope, B: Polytope, a: int, b: int) -> Cone:
    """Cone of the sum at ``a + b``: hull of ``b + C(a)`` and ``a + C(b)``."""
    check_summands(A, B)
    return _Walker(A, B).vertex_cone(a, b)


def neighbour_candidates(A: Polytope, B: Polytope, a: int, b: int, edge_dir: Sequence) -> tuple[int, int]:
    """Decomposition of the sum vertex reached from ``a + b`` along ``edge_dir``."""
    check_summands(A, B)
    return _Walker(A, B).neighbour(a, b, edge_dir)


def sum_primal(A: Polytope, B: Polytope, seed: int = 0) -> MinkowskiDecomposition:
    """Breadth-first traversal of the sum's vertex graph from a seed vertex."""
    check_summands(A, B)
    w = _Walker(A, B)
    start = seed_minkowski_vertex(A, B, seed=seed)
    witnesses: dict[tuple, tuple[int, int]] = {}
    facets: set[HalfSpace] = set()
    queued = {vertex_sum(A, B, *start)}
    frontier = deque([start])
    limit = len(A.vertices) * len(B.vertices)
    while frontier:
        a, b = frontier.popleft()
        c = vertex_sum(A, B, a, b)
        h = w.vertex_cone(a, b)
        witnesses[c] = (a, b)
        if len(witnesses) > limit:
            raise TraversalIncomplete("traversal exceeded |V_A| * |V_B| vertices")
        facets.update(HalfSpace.make(m, sum(x * y for x, y in zip(m, c))) for m in h.facets)
        step = []
        for d in h.rays:
            pair = w.neighbour(a, b, d)
            c2 = vertex_sum(A, B, *pair)
            if c2 not in queued:
                step.append((c2, pair))
        for c2, pair in sorted(step):
            queued.add(c2)
            frontier.append(pair)
    return assemble(A.dim, witnesses, facets, "primal", w.hull_count, TraversalIncomplete)
