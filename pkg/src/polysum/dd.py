"""Double description of homogeneous polyhedral cones.

``double_description(dim, rows)`` returns generators of the cone
``{x : <row, x> <= 0 for every row}``: a lineality basis and the extreme
rays modulo that lineality space.  Constraints are inserted one at a time
(Chernikova style); lines are consumed while a constraint cuts them, after
which rays are split into the usual positive/negative/zero classes and
adjacent pairs are combined.  Adjacency uses the combinatorial test over
zero-set bitmasks, which is the hot loop (see :mod:`polysum.kernels`).
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

from . import kernels
from .linalg import integer_direction, orthogonal_project, subspace_basis


def _normalize(v: Sequence[int]) -> tuple[int, ...]:
    g = gcd(*v)
    if g <= 1:
        return tuple(v)
    return tuple(a // g for a in v)


def _prepare(rows: Iterable[Sequence], dim: int) -> list[tuple[int, ...]]:
    seen = set()
    for r in rows:
        if len(r) != dim:
            raise ValueError(f"constraint of length {len(r)} in dimension {dim}")
        d = integer_direction(r)
        if any(d):
            seen.add(d)
    return sorted(seen)


def double_description(dim: int, rows: Iterable[Sequence]):
    """Generators ``(lines, rays)`` of ``{x : rows @ x <= 0}``.

    ``lines`` is a canonical integer basis of the lineality space; ``rays``
    are the extreme rays projected onto its orthogonal complement, as
    sorted coprime integer tuples.
    """
    cons = _prepare(rows, dim)
    lines: list[tuple[int, ...]] = [
        tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)
    ]
    rays: list[tuple[int, ...]] = []
    masks: list[int] = []

    for k, a in enumerate(cons):
        bit = 1 << k
        vals = kernels.dot_all(lines, a)
        piv = next((i for i, s in enumerate(vals) if s), None)
        if piv is not None:
            l0 = lines.pop(piv)
            s = vals.pop(piv)
            if s > 0:
                l0 = tuple(-x for x in l0)
                s = -s
            # s < 0: project every other generator onto the hyperplane <a, x> = 0
            new_lines = []
            for l, t in zip(lines, vals):
                if t:
                    l = _normalize([-s * x + t * y for x, y in zip(l, l0)])
                new_lines.append(l)
            lines = new_lines
            rvals = kernels.dot_all(rays, a)
            new_rays = []
            for r, t in zip(rays, rvals):
                if t:
                    r = _normalize([-s * x + t * y for x, y in zip(r, l0)])
                new_rays.append(r)
            rays = new_rays
            masks = [m | bit for m in masks]
            rays.append(_normalize(l0))
            masks.append(bit - 1)
            continue

        rvals = kernels.dot_all(rays, a)
        pos = [i for i, t in enumerate(rvals) if t > 0]
        if not pos:
            masks = [m | bit if t == 0 else m for m, t in zip(masks, rvals)]
            continue
        neg = [i for i, t in enumerate(rvals) if t < 0]
        min_common = dim - len(lines) - 2
        pairs = kernels.adjacent_pairs(masks, pos, neg, min_common) if neg else []
        new_rays = []
        new_masks = []
        for r, m, t in zip(rays, masks, rvals):
            if t < 0:
                new_rays.append(r)
                new_masks.append(m)
            elif t == 0:
                new_rays.append(r)
                new_masks.append(m | bit)
        for i, j in pairs:
            p, q = rays[i], rays[j]
            tp, tq = rvals[i], rvals[j]
            new_rays.append(_normalize([tp * y - tq * x for x, y in zip(p, q)]))
            new_masks.append((masks[i] & masks[j]) | bit)
        rays, masks = new_rays, new_masks

    line_basis = subspace_basis(lines, dim)
    if line_basis:
        out = {integer_direction(orthogonal_project(r, line_basis)) for r in rays}
    else:
        out = set(rays)
    out.discard(tuple([0] * dim))
    return line_basis, sorted(out)

