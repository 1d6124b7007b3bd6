"""Bounded full-dimensional polytopes in double description."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Sequence

from . import kernels
from .dd import double_description
from .errors import Empty, IndexOutOfRange, NotFullDimensional, Unbounded
from .linalg import as_vector, integer_direction, rank


@dataclass(frozen=True, order=True)
class HalfSpace:
    """The closed half-space ``{x : <normal, x> <= offset}``.

    Always built through :meth:`make`, which scales ``(normal, offset)`` to
    coprime integers by a positive factor, so equal half-spaces compare equal.
    """

    normal: tuple[int, ...]
    offset: int

    @classmethod
    def make(cls, normal: Sequence, offset) -> "HalfSpace":
        if not any(normal):
            raise ValueError("half-space normal must be nonzero")
        d = integer_direction(tuple(normal) + (offset,))
        return cls(d[:-1], d[-1])

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value(self, x: Sequence):
        """``<normal, x> - offset`` (<= 0 inside)."""
        return sum(a * b for a, b in zip(self.normal, x)) - self.offset

    def contains(self, x: Sequence, strict: bool = False) -> bool:
        v = self.value(x)
        return v < 0 if strict else v <= 0


def _homogenize(x: Sequence) -> tuple[int, tuple[int, ...]]:
    """``(den, nums)`` with ``x == nums / den`` and ``den > 0``."""
    fr = [Fraction(a) for a in x]
    den = lcm(*(a.denominator for a in fr)) if fr else 1
    return den, tuple(int(a * den) for a in fr)


def _slacks(facets: Sequence[HalfSpace], points: Sequence[Sequence]) -> list[list[int]]:
    """Per point, ``den * (offset - <normal, x>)`` for every facet (sign-exact)."""
    normals = [h.normal for h in facets]
    out = []
    for x in points:
        den, nums = _homogenize(x)
        vals = kernels.dot_all(normals, nums)
        out.append([h.offset * den - v for h, v in zip(facets, vals)])
    return out


@dataclass(frozen=True)
class Polytope:
    """Double description of a polytope.

    ``incidence[i]`` holds the sorted indices of the facets active at
    ``vertices[i]``.  Use :func:`from_halfspaces`, :func:`from_vertices` or
    :meth:`from_double_description` to build one; the raw constructor
    performs no checks (see :func:`validate_double_description`).
    """

    dim: int
    facets: tuple[HalfSpace, ...]
    vertices: tuple[tuple[Fraction, ...], ...]
    incidence: tuple[tuple[int, ...], ...] = field(compare=False)

    @classmethod
    def from_double_description(
        cls, dim: int, facets: Iterable[HalfSpace], vertices: Iterable[Sequence]
    ) -> "Polytope":
        fs = tuple(sorted(set(facets)))
        vs = tuple(sorted({as_vector(v) for v in vertices}))
        return cls(dim, fs, vs, incidence(fs, vs))

    def __repr__(self) -> str:
        return f"Polytope(dim={self.dim}, {len(self.vertices)} vertices, {len(self.facets)} facets)"

    def _check_index(self, v: int) -> None:
        if not 0 <= v < len(self.vertices):
            raise IndexOutOfRange(f"vertex index {v} out of range 0..{len(self.vertices) - 1}")

    def vertex_index(self, point: Sequence) -> int:
        try:
            return self._vertex_lookup[as_vector(point)]
        except KeyError:
            raise IndexOutOfRange(f"{tuple(point)} is not a vertex") from None

    @cached_property
    def _vertex_lookup(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edges(self) -> tuple[dict[tuple[int, ...], int], ...]:
        """Per vertex, a map from canonical edge direction to neighbour index."""
        return tuple(_walk_edges(self, i)[0] for i in range(len(self.vertices)))

    def edge_directions(self, v: int) -> dict[tuple[int, ...], int]:
        self._check_index(v)
        return self.edges[v]

    def contains(self, x: Sequence, strict: bool = False) -> bool:
        return all(h.contains(x, strict) for h in self.facets)

    def translate(self, t: Sequence) -> "Polytope":
        t = as_vector(t)
        fs = [HalfSpace.make(h.normal, h.offset + sum(a * b for a, b in zip(h.normal, t))) for h in self.facets]
        vs = [tuple(a + b for a, b in zip(v, t)) for v in self.vertices]
        return Polytope.from_double_description(self.dim, fs, vs)


def incidence(facets: Sequence[HalfSpace], vertices: Sequence[Sequence]) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(k for k, s in enumerate(row) if s == 0) for row in _slacks(facets, vertices)
    )


def _affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull (-1 for no points)."""
    if not points:
        return -1
    return rank([(1,) + tuple(p) for p in points]) - 1


def _walk_edges(p: Polytope, i: int):
    """Edges leaving vertex ``i``: (direction -> neighbour, unmatched directions).

    The edge directions are the extreme rays of the cone cut out by the active
    facets; each is followed to the first facet it leaves.
    """
    v = p.vertices[i]
    den, _ = _homogenize(v)
    slack = _slacks(p.facets, [v])[0]
    active = [h.normal for h, s in zip(p.facets, slack) if s == 0]
    normals = [h.normal for h in p.facets]
    lines, rays = double_description(p.dim, active)
    found: dict[tuple[int, ...], int] = {}
    missing: list[tuple[int, ...]] = []
    for d in [*rays, *lines, *(tuple(-x for x in l) for l in lines)]:
        step = None
        for s, nd in zip(slack, kernels.dot_all(normals, d)):
            if nd > 0:
                t = Fraction(s, den * nd)
                if step is None or t < step:
                    step = t
        if step is None or step == 0:
            missing.append(d)
            continue
        w = tuple(a + step * b for a, b in zip(v, d))
        j = p._vertex_lookup.get(w)
        if j is None:
            missing.append(d)
        else:
            found[d] = j
    return found, missing


def from_halfspaces(dim: int, hs: Iterable[HalfSpace]) -> Polytope:
    """Vertices, irredundant facets and incidence of an H-polytope."""
    hs = sorted({HalfSpace.make(h.normal, h.offset) for h in hs})
    if not hs:
        raise Unbounded("no half-spaces given")
    for h in hs:
        if h.dim != dim:
            raise ValueError(f"half-space of dimension {h.dim} in R^{dim}")
    # homogenized cone over (t, x): <n, x> - b t <= 0 and t >= 0
    rows = [(-h.offset,) + h.normal for h in hs]
    rows.append((-1,) + (0,) * dim)
    lines, rays = double_description(dim + 1, rows)
    points = [tuple(Fraction(c, r[0]) for c in r[1:]) for r in rays if r[0] > 0]
    if not points:
        raise Empty("half-space system is infeasible")
    if lines or any(r[0] == 0 for r in rays):
        raise Unbounded("half-space system has a recession direction")
    if _affine_rank(points) < dim:
        raise NotFullDimensional("half-space system has empty interior")
    sl = _slacks(hs, points)
    facets = [
        h for k, h in enumerate(hs)
        if _affine_rank([x for x, row in zip(points, sl) if row[k] == 0]) == dim - 1
    ]
    return Polytope.from_double_description(dim, facets, points)


def from_vertices(dim: int, pts: Iterable[Sequence]) -> Polytope:
    """Exact convex hull of a point set; interior points are dropped."""
    points = sorted({as_vector(p) for p in pts})
    if not points:
        raise NotFullDimensional("no points given")
    for x in points:
        if len(x) != dim:
            raise ValueError(f"point of dimension {len(x)} in R^{dim}")
    if _affine_rank(points) < dim:
        raise NotFullDimensional(f"points span an affine subspace of dimension {_affine_rank(points)} < {dim}")
    # (b, a) with <a, p> <= b for every point
    _, rays = double_description(dim + 1, [(-1,) + p for p in points])
    facets = [HalfSpace.make(r[1:], r[0]) for r in rays if any(r[1:])]
    verts = []
    for x, row in zip(points, _slacks(facets, points)):
        active = [h.normal for h, s in zip(facets, row) if s == 0]
        if len(active) >= dim and rank(active) == dim:
            verts.append(x)
    return Polytope.from_double_description(dim, facets, verts)


def vertex_neighbours(p: Polytope, v: int) -> list[int]:
    """Indices of the vertices sharing an edge with vertex ``v``."""
    p._check_index(v)
    return sorted(p.edges[v].values())


def interior_point(p: Polytope) -> tuple[Fraction, ...]:
    """Vertex barycenter (strictly interior for a full-dimensional polytope)."""
    m = len(p.vertices)
    return tuple(sum(col, Fraction(0)) / m for col in zip(*p.vertices))


def validate_double_description(p: Polytope) -> list[str]:
    """Human-readable list of double-description violations (empty if valid)."""
    out: list[str] = []
    n = p.dim
    seen_f: dict[HalfSpace, int] = {}
    for k, h in enumerate(p.facets):
        if h.dim != n:
            out.append(f"facet {k} has dimension {h.dim}, expected {n}")
            return out
        if h in seen_f:
            out.append(f"redundant facet {k} (duplicate of facet {seen_f[h]})")
        else:
            seen_f[h] = k
    seen_v: dict[tuple, int] = {}
    for i, v in enumerate(p.vertices):
        if len(v) != n:
            out.append(f"vertex {i} has dimension {len(v)}, expected {n}")
            return out
        if v in seen_v:
            out.append(f"duplicate vertex {i} (same as vertex {seen_v[v]})")
        else:
            seen_v[v] = i
    if not p.facets or not p.vertices:
        out.append("empty facet or vertex list")
        return out

    sl = _slacks(p.facets, p.vertices)
    for i, row in enumerate(sl):
        for k, s in enumerate(row):
            if s < 0:
                out.append(f"vertex {i} outside facet {k}")
    if len(p.incidence) != len(p.vertices):
        out.append("incidence list length differs from vertex count")
    else:
        for i, (row, inc) in enumerate(zip(sl, p.incidence)):
            actual = tuple(k for k, s in enumerate(row) if s == 0)
            if tuple(inc) != actual:
                out.append(f"incidence mismatch at vertex {i}: stored {tuple(inc)}, actual {actual}")
    for i, row in enumerate(sl):
        active = [h.normal for h, s in zip(p.facets, row) if s == 0]
        r = rank(active) if active else 0
        if r < n:
            out.append(f"vertex {i} is not extreme (active normals have rank {r} < {n})")
    for k, h in enumerate(p.facets):
        face = [v for v, row in zip(p.vertices, sl) if row[k] == 0]
        d = _affine_rank(face)
        if d < n - 1:
            out.append(f"redundant facet {k} (touches a face of dimension {d})")

    lines, rays = double_description(n, [h.normal for h in p.facets])
    if lines or rays:
        out.append("unbounded: the facet normals do not positively span the space")
        return out
    if _affine_rank(p.vertices) < n:
        out.append("not full-dimensional")
        return out
    if out:
        return out
    for i in range(len(p.vertices)):
        _, missing = _walk_edges(p, i)
        for d in missing:
            out.append(f"missing vertex along edge direction {d} from vertex {i}")
    return out


def cube(n: int, lo=0, hi=1) -> Polytope:
    """The cube ``[lo, hi]^n`` built from its 2n half-spaces."""
    hs = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        hs.append(HalfSpace.make(e, hi))
        hs.append(HalfSpace.make(tuple(-x for x in e), -lo))
    return from_halfspaces(n, hs)


def simplex(n: int) -> Polytope:
    """The standard simplex ``conv{0, e_1, ..., e_n}``."""
    pts = [(0,) * n] + [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    return from_vertices(n, pts)
