"""Minkowski sums by intersecting dual cones (normal fan refinement).

A pair of vertices ``(a, b)`` sums to a vertex of ``A + B`` exactly when
their normal cones meet in a full-dimensional cone; the extreme rays of that
cone are the outer normals of the sum's facets through ``a + b``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .cones import Cone, cone_dim, dual_cone, intersect_cones, normal_fan
from .decomposition import MinkowskiDecomposition, assemble, check_summands, vertex_sum
from .errors import CapDisconnected, InternalInconsistency, NotFullDimensional
from .polytope import HalfSpace, Polytope


@dataclass(frozen=True)
class PolyhedralCap:
    """Vertices of B that pair with ``anchor`` (a vertex of A) into sum vertices."""

    anchor: int
    members: tuple[int, ...]
    connected: bool


def is_minkowski_vertex_pair(A: Polytope, B: Polytope, a: int, b: int) -> tuple[bool, Cone]:
    check_summands(A, B)
    r = intersect_cones(dual_cone(A, a), dual_cone(B, b))
    return cone_dim(r) == A.dim, r


def facets_from_refined_cone(r: Cone, c) -> list[HalfSpace]:
    """Facet half-spaces of the sum through ``c``, one per extreme ray of ``r``."""
    if cone_dim(r) < r.dim:
        raise NotFullDimensional(f"refined cone has dimension {cone_dim(r)} < {r.dim}")
    return sorted(HalfSpace.make(ray, sum(x * y for x, y in zip(ray, c))) for ray in r.rays)


class _Collector:
    def __init__(self, A: Polytope, B: Polytope):
        self.A, self.B = A, B
        self.witnesses: dict[tuple, tuple[int, int]] = {}
        self.facets: set[HalfSpace] = set()

    def add(self, i: int, j: int, r: Cone) -> None:
        c = vertex_sum(self.A, self.B, i, j)
        if c in self.witnesses:
            raise InternalInconsistency(
                f"sum vertex {c} decomposes as both {self.witnesses[c]} and {(i, j)}"
            )
        self.witnesses[c] = (i, j)
        self.facets.update(facets_from_refined_cone(r, c))


def sum_dual_brute(A: Polytope, B: Polytope) -> MinkowskiDecomposition:
    """Intersect every pair of dual cones; keep the full-dimensional ones."""
    check_summands(A, B)
    fa, fb = normal_fan(A), normal_fan(B)
    out = _Collector(A, B)
    count = 0
    for i, ca in enumerate(fa):
        for j, cb in enumerate(fb):
            r = intersect_cones(ca, cb)
            count += 1
            if cone_dim(r) == A.dim:
                out.add(i, j, r)
    return assemble(A.dim, out.witnesses, out.facets, "dual", count)


def _connected(B: Polytope, members: set[int]) -> bool:
    if not members:
        return False
    start = min(members)
    seen = {start}
    todo = deque([start])
    while todo:
        j = todo.popleft()
        for k in B.edges[j].values():
            if k in members and k not in seen:
                seen.add(k)
                todo.append(k)
    return seen == members


def polyhedral_cap(A: Polytope, B: Polytope, a: int) -> PolyhedralCap:
    """Exact cap of vertex ``a`` in B, by testing every vertex of B."""
    check_summands(A, B)
    A._check_index(a)
    members = {j for j in range(len(B.vertices)) if is_minkowski_vertex_pair(A, B, a, j)[0]}
    return PolyhedralCap(a, tuple(sorted(members)), _connected(B, members))


def sum_dual_optimized(A: Polytope, B: Polytope) -> MinkowskiDecomposition:
    """Per vertex of A, find one cap member then grow the cap through
    facets of the refined cones that come from B's dual cones."""
    check_summands(A, B)
    n = A.dim
    fa, fb = normal_fan(A), normal_fan(B)
    out = _Collector(A, B)
    count = 0
    for i, ca in enumerate(fa):
        marked: set[int] = set()
        stack: list[tuple[int, Cone]] = []
        for j, cb in enumerate(fb):
            marked.add(j)
            r = intersect_cones(ca, cb)
            count += 1
            if cone_dim(r) == n:
                stack.append((j, r))
                break
        if not stack:
            raise CapDisconnected(f"empty polyhedral cap for vertex {i} of A")
        while stack:
            j, r = stack.pop()
            out.add(i, j, r)
            across = B.edges[j]
            for e in r.facets:
                k = across.get(e)
                if k is None or k in marked:
                    continue
                marked.add(k)
                rk = intersect_cones(ca, fb[k])
                count += 1
                if cone_dim(rk) == n:
                    stack.append((k, rk))
    return assemble(n, out.witnesses, out.facets, "dual-opt", count, CapDisconnected)
