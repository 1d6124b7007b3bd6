"""Brute-force reference computations independent of the DD kernel."""

from fractions import Fraction
from itertools import combinations

from polysum.linalg import NoSolution, Underdetermined, integer_direction, nullspace, rank, solve_linear


def monotone_chain_hull(points):
    """Vertices of a planar convex hull (Andrew's monotone chain, exact)."""
    pts = sorted({tuple(Fraction(c) for c in p) for p in points})
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return sorted(lower[:-1] + upper[:-1])


def vertices_by_enumeration(n, halfspaces):
    """Solve every n-subset of boundary hyperplanes; keep feasible points."""
    out = set()
    for sub in combinations(halfspaces, n):
        try:
            x = solve_linear([h.normal for h in sub], [h.offset for h in sub])
        except (NoSolution, Underdetermined):
            continue
        if all(h.value(x) <= 0 for h in halfspaces):
            out.add(x)
    return sorted(out)


def facets_by_enumeration(n, points):
    """Hyperplanes through n affinely independent points with all points on one side."""
    from polysum.polytope import HalfSpace

    pts = sorted({tuple(Fraction(c) for c in p) for p in points})
    out = set()
    for sub in combinations(pts, n):
        ns = nullspace([(1,) + p for p in sub], n + 1)
        if len(ns) != 1:
            continue
        b0, *a = ns[0]
        # hyperplane: b0 + <a, x> = 0
        vals = [b0 + sum(x * y for x, y in zip(a, p)) for p in pts]
        if all(v >= 0 for v in vals):
            out.add(HalfSpace.make(tuple(-c for c in a), b0))
        if all(v <= 0 for v in vals):
            out.add(HalfSpace.make(tuple(a), -b0))
    return sorted(out)


def adjacency_by_rank(p):
    """Vertex pairs whose common active facets have normal-rank n - 1."""
    adj = {i: set() for i in range(len(p.vertices))}
    for i, j in combinations(range(len(p.vertices)), 2):
        common = set(p.incidence[i]) & set(p.incidence[j])
        if common and rank([p.facets[k].normal for k in common]) == p.dim - 1:
            adj[i].add(j)
            adj[j].add(i)
    return adj


def argmax_vertices(p, u):
    vals = [sum(a * b for a, b in zip(u, v)) for v in p.vertices]
    best = max(vals)
    return [i for i, x in enumerate(vals) if x == best]


def pairwise_sums(A, B):
    return {tuple(x + y for x, y in zip(a, b)) for a in A.vertices for b in B.vertices}


def canonical_dir(v):
    return integer_direction(v)
