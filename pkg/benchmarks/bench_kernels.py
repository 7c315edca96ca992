"""Compare the compiled and pure-Python Groebner kernels on fixed workloads.

    python benchmarks/bench_kernels.py [--repeat N] [--quick]

Each workload is a Groebner computation from the package; both kernel
implementations must produce identical bases.
"""

import argparse
import time

from slackkit import kernels
from slackkit.groebner import groebner_basis, minimal_generator_count
from slackkit.polytope import construct_catalog, pattern_of, printed_pattern
from slackkit.slackcore import (
    SymbolicSlackMatrix,
    minor_generators,
    slack_ideal,
    spanning_forest_scaling,
    toric_ideal_TP,
)


def _seven_vertex_direct():
    P = printed_pattern("example-7vertex-4polytope")
    return tuple(slack_ideal(P, method="direct").groebner())


def _cube_toric_mingens():
    P = pattern_of(construct_catalog("cube3"))
    return minimal_generator_count(toric_ideal_TP(P).ideal)


def _eight_vertex_scaled():
    P = printed_pattern("example-8vertex-5polytope")
    forest = spanning_forest_scaling(P)
    S = SymbolicSlackMatrix(P, forest.substitution())
    gens = minor_generators(S, P.d + 2)
    return tuple(groebner_basis(gens))


def _pentagon():
    P = pattern_of(construct_catalog("cyclic5-2"))
    return tuple(slack_ideal(P).groebner())


WORKLOADS = {
    "pentagon slack ideal": _pentagon,
    "7-vertex slack ideal (direct)": _seven_vertex_direct,
    "cube T_P minimal generators": _cube_toric_mingens,
    "8-vertex scaled minor basis": _eight_vertex_scaled,
}
QUICK = ["pentagon slack ideal", "7-vertex slack ideal (direct)"]


def _time(fn, repeat):
    best, result = None, None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args(argv)
    impls = ["python"] + (["cython"] if kernels.compiled_kernels is not None else [])
    if len(impls) == 1:
        print("compiled kernels not built; timing the Python fallback only")
    names = QUICK if args.quick else list(WORKLOADS)
    print(f"{'workload':34s}" + "".join(f"{i:>12s}" for i in impls) + ("     speedup" if len(impls) == 2 else ""))
    for name in names:
        times, results = [], []
        for impl in impls:
            with kernels.use(impl):
                dt, res = _time(WORKLOADS[name], args.repeat)
            times.append(dt)
            results.append(res)
        if any(r != results[0] for r in results):
            raise SystemExit(f"{name}: implementations disagree")
        row = f"{name:34s}" + "".join(f"{t:11.3f}s" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:11.2f}x"
        print(row, flush=True)


if __name__ == "__main__":
    main()
