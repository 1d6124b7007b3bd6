"""Exact Minkowski sums of full-dimensional convex polytopes.

Three interchangeable algorithms share one exact double-description kernel:

* :func:`sum_dual_brute` intersects every pair of dual (normal) cones;
* :func:`sum_dual_optimized` grows each polyhedral cap from one hit;
* :func:`sum_primal` walks the sum's vertex graph through primal-cone hulls.

:func:`oracle_sum` (hull of all pairwise vertex sums) is the reference.
"""

from .cones import (
    Cone,
    cone_dim,
    contains_direction,
    convex_hull_of_cones,
    dual_cone,
    intersect_cones,
    normal_fan,
    polar_dual,
    primal_cone,
)
from .decomposition import MinkowskiDecomposition
from .dual import (
    PolyhedralCap,
    facets_from_refined_cone,
    is_minkowski_vertex_pair,
    polyhedral_cap,
    sum_dual_brute,
    sum_dual_optimized,
)
from .errors import *  # noqa: F401,F403
from .kernels import BACKEND as KERNEL_BACKEND
from .linalg import dot, parse_rational, rank, solve_linear
from .oracle import oracle_membership, oracle_sum
from .polytope import (
    HalfSpace,
    Polytope,
    cube,
    from_halfspaces,
    from_vertices,
    interior_point,
    simplex,
    validate_double_description,
    vertex_neighbours,
)
from .primal import minkowski_vertex_cone, neighbour_candidates, seed_minkowski_vertex, sum_primal

__version__ = "0.1.0"
