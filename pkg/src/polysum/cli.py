"""Command-line interface: ``polysum {sum,convert,validate,cap,bench}``.

Exit codes: 0 success, 1 parse/validation error, 2 method precondition
failure (e.g. a summand that is not full-dimensional), 3 ``--check``
mismatch against the oracle.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from . import kernels
from .cdd import PolyhedronFile, parse_file, write_file
from .decomposition import MinkowskiDecomposition
from .dual import polyhedral_cap, sum_dual_brute, sum_dual_optimized
from .errors import (
    DimensionMismatch,
    Empty,
    InternalInconsistency,
    NotFullDimensional,
    ParseError,
    Unbounded,
)
from .linalg import format_rational
from .oracle import oracle_sum
from .polytope import Polytope, from_halfspaces, from_vertices, incidence, validate_double_description
from .primal import sum_primal

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 1, 2, 3

METHODS = ("dual", "dual-opt", "primal", "oracle")


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _seed() -> int:
    raw = os.environ.get("POLYSUM_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise _Exit(EXIT_INPUT, f"POLYSUM_SEED must be an integer, got {raw!r}") from None


def _read(path: str) -> PolyhedronFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Exit(EXIT_INPUT, f"{path}: {exc.strerror or exc}") from None
    try:
        return parse_file(text)
    except ParseError as exc:
        raise _Exit(EXIT_INPUT, f"{path}: {exc}") from None


def _build(path: str, pf: PolyhedronFile) -> Polytope:
    try:
        return pf.to_polytope()
    except NotFullDimensional as exc:
        raise _Exit(EXIT_PRECONDITION, f"{path}: NotFullDimensional: {exc}") from None
    except (Unbounded, Empty) as exc:
        raise _Exit(EXIT_INPUT, f"{path}: {type(exc).__name__}: {exc}") from None


def _point(v) -> str:
    return "(" + ", ".join(format_rational(x) for x in v) + ")"


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _run_method(method: str, A: Polytope, B: Polytope) -> MinkowskiDecomposition:
    if method == "dual":
        return sum_dual_brute(A, B)
    if method == "dual-opt":
        return sum_dual_optimized(A, B)
    if method == "primal":
        return sum_primal(A, B, seed=_seed())
    raise ValueError(method)


def cmd_sum(args) -> int:
    fa, fb = _read(args.a), _read(args.b)
    if fa.dim != fb.dim:
        raise _Exit(EXIT_PRECONDITION, f"DimensionMismatch: R^{fa.dim} vs R^{fb.dim}")
    witnesses = None
    if args.method == "oracle":
        summands = []
        for path, pf in ((args.a, fa), (args.b, fb)):
            summands.append(pf.points() if pf.representation == "V" else _build(path, pf))
        try:
            C = oracle_sum(*summands)
        except NotFullDimensional as exc:
            raise _Exit(EXIT_PRECONDITION, f"NotFullDimensional: {exc}") from None
    else:
        A, B = _build(args.a, fa), _build(args.b, fb)
        try:
            dec = _run_method(args.method, A, B)
        except InternalInconsistency as exc:
            raise _Exit(EXIT_INPUT, f"{type(exc).__name__}: {exc}") from None
        C = dec.sum
        witnesses = [
            f"vertex {k} {_point(v)} = A[{i}] {_point(A.vertices[i])} + B[{j}] {_point(B.vertices[j])}"
            for k, (v, (i, j)) in enumerate(zip(C.vertices, dec.witnesses))
        ]

    header = [f"polysum sum --method {args.method}"]
    trailer = witnesses if (args.witnesses and witnesses) else ()
    h_text = write_file(C, "H", header)
    if args.output is None and args.ext is None:
        _write(h_text, None)
        _write(write_file(C, "V", header, trailer), None)
    else:
        if args.output is not None:
            _write(write_file(C, "H", header, trailer if args.ext is None else ()), args.output)
        if args.ext is not None:
            _write(write_file(C, "V", header, trailer), args.ext)

    if args.check:
        try:
            ref = oracle_sum(*(pf.points() if pf.representation == "V" else _build(p, pf)
                               for p, pf in ((args.a, fa), (args.b, fb))))
        except NotFullDimensional as exc:
            raise _Exit(EXIT_PRECONDITION, f"NotFullDimensional: {exc}") from None
        if ref != C:
            print("check: MISMATCH against the oracle sum", file=sys.stderr)
            return EXIT_MISMATCH
        print("check: ok (matches the oracle sum)", file=sys.stderr)
    return EXIT_OK


def cmd_convert(args) -> int:
    pf = _read(args.input)
    p = _build(args.input, pf)
    _write(write_file(p, args.to, [f"polysum convert --to {args.to}"]), args.output)
    return EXIT_OK


def _raw_polytope(path: str, pf: PolyhedronFile) -> Polytope:
    """The file's own rows on one side, the computed representation on the other."""
    if pf.representation == "H":
        facets = tuple(pf.halfspaces())
        vertices = from_halfspaces(pf.dim, facets).vertices
    else:
        vertices = tuple(pf.points())
        facets = from_vertices(pf.dim, vertices).facets
    return Polytope(pf.dim, facets, vertices, incidence(facets, vertices))


def cmd_validate(args) -> int:
    pf = _read(args.input)
    try:
        raw = _raw_polytope(args.input, pf)
    except (Unbounded, Empty, NotFullDimensional) as exc:
        print(f"{args.input}: {type(exc).__name__}: {exc}")
        return EXIT_INPUT
    problems = validate_double_description(raw)
    print(f"{args.input}: {pf.representation}-representation, dimension {pf.dim}, "
          f"{len(raw.vertices)} vertices, {len(raw.facets)} facets")
    for line in problems:
        print(f"violation: {line}")
    print("valid" if not problems else f"invalid ({len(problems)} violations)")
    return EXIT_OK if not problems else EXIT_INPUT


def cmd_cap(args) -> int:
    fa, fb = _read(args.a), _read(args.b)
    A, B = _build(args.a, fa), _build(args.b, fb)
    if A.dim != B.dim:
        raise _Exit(EXIT_PRECONDITION, f"DimensionMismatch: R^{A.dim} vs R^{B.dim}")
    if not 0 <= args.vertex < len(A.vertices):
        raise _Exit(EXIT_INPUT, f"vertex index {args.vertex} out of range 0..{len(A.vertices) - 1}")
    cap = polyhedral_cap(A, B, args.vertex)
    print(f"anchor: A[{args.vertex}] {_point(A.vertices[args.vertex])}")
    print(f"members: {len(cap.members)} of {len(B.vertices)}")
    for j in cap.members:
        print(f"  B[{j}] {_point(B.vertices[j])}")
    print(f"connected: {'yes' if cap.connected else 'no'}")
    return EXIT_OK


def cmd_bench(args) -> int:
    fa, fb = _read(args.a), _read(args.b)
    A, B = _build(args.a, fa), _build(args.b, fb)
    if A.dim != B.dim:
        raise _Exit(EXIT_PRECONDITION, f"DimensionMismatch: R^{A.dim} vs R^{B.dim}")
    counts = {}
    for method in METHODS:
        best = None
        for _ in range(max(1, args.repeat)):
            t0 = time.perf_counter()
            if method == "oracle":
                oracle_sum(A, B)
            else:
                counts[method] = _run_method(method, A, B).cone_operations
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        # timings are not reproducible, so they go to stderr
        print(f"time {method}: {best:.6f} s (best of {max(1, args.repeat)}, kernels={kernels.BACKEND})",
              file=sys.stderr)
    pairs = len(A.vertices) * len(B.vertices)
    print(f"vertex pairs |V_A|*|V_B|: {pairs}")
    print(f"cone intersections dual: {counts['dual']}")
    print(f"cone intersections dual-opt: {counts['dual-opt']}")
    print(f"hull cones primal: {counts['primal']}")
    print(f"dual-opt / dual ratio: {counts['dual-opt']}/{counts['dual']}"
          f" = {counts['dual-opt'] / counts['dual']:.4f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polysum", description="Exact Minkowski sums of convex polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sum", help="compute A + B")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--method", choices=METHODS, default="dual-opt")
    p.add_argument("-o", "--output", metavar="OUT.ine", help="write the H-representation here")
    p.add_argument("--ext", metavar="OUT.ext", help="write the V-representation here")
    p.add_argument("--witnesses", action="store_true", help="append per-vertex decompositions as comments")
    p.add_argument("--check", action="store_true", help="compare with the oracle sum (exit 3 on mismatch)")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("convert", help="switch between H- and V-representation")
    p.add_argument("input")
    p.add_argument("--to", choices=("H", "V"), required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("validate", help="check a file's double description")
    p.add_argument("input")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("cap", help="polyhedral cap of a vertex of A in B")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--vertex", type=int, required=True)
    p.set_defaults(func=cmd_cap)

    p = sub.add_parser("bench", help="time every method and compare cone-operation counts")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--repeat", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"polysum: error: {exc}", file=sys.stderr)
        return exc.code
    except DimensionMismatch as exc:
        print(f"polysum: error: DimensionMismatch: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
