"""Polyhedral cones in double description: primal and dual vertex cones,
intersection, convex hull, polar duality.

A :class:`Cone` always carries both descriptions.  Intersection merges the
inequality sides and recomputes generators; convex hull merges generators
and recomputes inequalities.  Both directions run through the same kernel,
:func:`polysum.dd.double_description`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .dd import double_description
from .errors import ApexMismatch, DimensionMismatch
from .linalg import as_vector, integer_direction, rank
from .polytope import HalfSpace, Polytope

IntVec = tuple[int, ...]


def _origin(dim: int) -> tuple[Fraction, ...]:
    return (Fraction(0),) * dim


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class Cone:
    """``apex + {y : <m, y> <= 0 for m in facets, <e, y> = 0 for e in equalities}``.

    Generators: ``rays`` (extreme rays modulo the lineality space) and
    ``lines`` (a canonical basis of the lineality space).  All directions
    are coprime integer tuples; rays keep their orientation.
    """

    dim: int
    apex: tuple[Fraction, ...]
    rays: tuple[IntVec, ...]
    lines: tuple[IntVec, ...]
    facets: tuple[IntVec, ...]
    equalities: tuple[IntVec, ...]

    @classmethod
    def from_supports(cls, dim: int, normals: Iterable[Sequence], apex=None) -> "Cone":
        normals = sorted({integer_direction(m) for m in normals if any(m)})
        apex = _origin(dim) if apex is None else as_vector(apex)
        lines, rays = double_description(dim, normals)
        if rank([*rays, *lines]) == dim:
            gens = [*rays, *lines]
            facets = [m for m in normals if rank([g for g in gens if _dot(m, g) == 0] or [(0,) * dim]) == dim - 1]
            return cls(dim, apex, tuple(rays), tuple(lines), tuple(facets), ())
        eqs, facets = _polar_generators(dim, rays, lines)
        return cls(dim, apex, tuple(rays), tuple(lines), tuple(facets), tuple(eqs))

    @classmethod
    def from_rays(cls, dim: int, rays: Iterable[Sequence], lines: Iterable[Sequence] = (), apex=None) -> "Cone":
        rays = [integer_direction(r) for r in rays if any(r)]
        lines = [integer_direction(l) for l in lines if any(l)]
        apex = _origin(dim) if apex is None else as_vector(apex)
        eqs, facets = _polar_generators(dim, rays, lines)
        # regenerate to get extreme rays and a canonical lineality basis
        lin, ext = double_description(dim, [*facets, *eqs, *(tuple(-x for x in e) for e in eqs)])
        return cls(dim, apex, tuple(ext), tuple(lin), tuple(facets), tuple(eqs))

    @property
    def pointed(self) -> bool:
        return not self.lines

    @property
    def full_dimensional(self) -> bool:
        return not self.equalities

    @property
    def supports(self) -> list[HalfSpace]:
        """Irredundant half-spaces through the apex (equalities as pairs)."""
        out = [HalfSpace.make(m, _dot(m, self.apex)) for m in self.facets]
        for e in self.equalities:
            out.append(HalfSpace.make(e, _dot(e, self.apex)))
            out.append(HalfSpace.make(tuple(-x for x in e), -_dot(e, self.apex)))
        return out

    def with_apex(self, apex: Sequence) -> "Cone":
        return Cone(self.dim, as_vector(apex), self.rays, self.lines, self.facets, self.equalities)

    def translate(self, t: Sequence) -> "Cone":
        return self.with_apex(tuple(a + b for a, b in zip(self.apex, t)))

    def contains_point(self, x: Sequence, strict: bool = False) -> bool:
        return contains_direction(self, tuple(a - b for a, b in zip(x, self.apex)), strict)


def _polar_generators(dim: int, rays, lines):
    """``(equalities, facet normals)`` of the cone generated by rays and lines."""
    rows = [*rays, *lines, *(tuple(-x for x in l) for l in lines)]
    return double_description(dim, rows)


def _check_same_space(c1: Cone, c2: Cone) -> None:
    if c1.dim != c2.dim:
        raise DimensionMismatch(f"cones in R^{c1.dim} and R^{c2.dim}")


def primal_cone(p: Polytope, v: int) -> Cone:
    """Cone at vertex ``v`` spanned by the edges towards its neighbours."""
    edges = p.edge_directions(v)
    normals = sorted({integer_direction(p.facets[k].normal) for k in p.incidence[v]})
    return Cone(p.dim, p.vertices[v], tuple(sorted(edges)), (), tuple(normals), ())


def dual_cone(p: Polytope, v: int) -> Cone:
    """Cone of outer facet normals at vertex ``v``, apexed at the origin."""
    edges = p.edge_directions(v)
    normals = sorted({integer_direction(p.facets[k].normal) for k in p.incidence[v]})
    return Cone(p.dim, _origin(p.dim), tuple(normals), (), tuple(sorted(edges)), ())


def normal_fan(p: Polytope) -> list[Cone]:
    return [dual_cone(p, i) for i in range(len(p.vertices))]


def intersect_cones(c1: Cone, c2: Cone) -> Cone:
    _check_same_space(c1, c2)
    if c1.apex != c2.apex:
        raise ApexMismatch(f"apexes {c1.apex} and {c2.apex} differ")
    normals = [*c1.facets, *c2.facets]
    for e in (*c1.equalities, *c2.equalities):
        normals.append(e)
        normals.append(tuple(-x for x in e))
    return Cone.from_supports(c1.dim, normals, c1.apex)


def cone_dim(c: Cone) -> int:
    return rank([*c.rays, *c.lines]) if (c.rays or c.lines) else 0


def convex_hull_of_cones(c1: Cone, c2: Cone, common_apex: Sequence) -> Cone:
    """Cone generated by both ray sets at ``common_apex`` (their Minkowski sum)."""
    _check_same_space(c1, c2)
    apex = as_vector(common_apex)
    for c in (c1, c2):
        if c.apex != apex:
            raise ApexMismatch(f"cone apex {c.apex} differs from {apex}")
    return Cone.from_rays(c1.dim, [*c1.rays, *c2.rays], [*c1.lines, *c2.lines], apex)


def polar_dual(c: Cone) -> Cone:
    """``{y : <y, x> <= 0 for all x in c}``; an involution on origin cones."""
    if any(c.apex):
        raise ApexMismatch("polar_dual needs a cone apexed at the origin")
    return Cone(c.dim, c.apex, c.facets, c.equalities, c.rays, c.lines)


def contains_direction(c: Cone, u: Sequence, strict: bool = False) -> bool:
    if len(u) != c.dim:
        raise DimensionMismatch(f"direction of length {len(u)} for a cone in R^{c.dim}")
    if any(_dot(e, u) != 0 for e in c.equalities):
        return False
    if strict:
        return not c.equalities and all(_dot(m, u) < 0 for m in c.facets)
    return all(_dot(m, u) <= 0 for m in c.facets)
