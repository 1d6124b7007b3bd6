"""Compare the compiled and pure-Python kernel backends.

Each backend runs in its own interpreter (the backend is fixed at import),
selected with POLYSUM_PURE_PYTHON.  Usage::

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, random, sys, time
sys.path.insert(0, "tests")
import polysum
from conftest import random_polytope

def best(f, k):
    out = None
    for _ in range(k):
        t0 = time.perf_counter()
        f()
        dt = time.perf_counter() - t0
        out = dt if out is None else min(out, dt)
    return out

k = int(sys.argv[1])
rng = random.Random(7)
pts4 = [tuple(rng.randint(-10, 10) for _ in range(4)) for _ in range(30)]
A3, B3 = random_polytope(rng, 3, 16), random_polytope(rng, 3, 16)
A4, B4 = random_polytope(rng, 4, 14), random_polytope(rng, 4, 14)
cases = {
    "H->V 6-cube": lambda: polysum.cube(6),
    "V->H hull of 30 points in R^4": lambda: polysum.from_vertices(4, pts4),
    "dual-opt sum R^3": lambda: polysum.sum_dual_optimized(A3, B3),
    "primal sum R^3": lambda: polysum.sum_primal(A3, B3),
    "dual sum R^4": lambda: polysum.sum_dual_brute(A4, B4),
    "oracle sum R^4": lambda: polysum.oracle_sum(A4, B4),
}
print(json.dumps({"backend": polysum.KERNEL_BACKEND,
                  "times": {name: best(f, k) for name, f in cases.items()}}))
"""


def run(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("POLYSUM_PURE_PYTHON", None)
    if pure:
        env["POLYSUM_PURE_PYTHON"] = "1"
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    p = subprocess.run([sys.executable, "-c", WORKLOAD, str(repeat)], env=env, cwd=root,
                       capture_output=True, text=True, check=True)
    return json.loads(p.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast, slow = run(False, args.repeat), run(True, args.repeat)
    if fast["backend"] != "cython":
        print("compiled kernels unavailable; build with `python3 setup.py build_ext --inplace`", file=sys.stderr)
    print(f"{'workload':34} {fast['backend']:>10} {slow['backend']:>10} {'speedup':>8}")
    for name, t in fast["times"].items():
        s = slow["times"][name]
        print(f"{name:34} {t:10.4f} {s:10.4f} {s / t:7.2f}x")


if __name__ == "__main__":
    main()
