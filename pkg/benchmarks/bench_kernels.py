"""Compare the numba kernels with the numpy / pure-Python fallbacks.

Run from the repository root::

    python benchmarks/bench_kernels.py [--repeat N] [--skip-six]

Each row times the same computation with DETGENS_NUMBA=1 and =0 and
checks that both produce the same result.  The first numba call pays for
compilation (cached on disk afterwards), so it is warmed up first.
"""

import argparse
import os
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from conftest import power2x5, power_relations, sparse3x3  # noqa: E402

from detgens import (CoeffField, _kernels, antidiagonal_reduce, buchberger,  # noqa: E402
                     radical_equal, reduce_disjoint_sets, t_minors)

GF = CoeffField(32003)


def best(fn, repeat):
    times, out = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def with_flag(flag, fn, repeat):
    old = os.environ.get("DETGENS_NUMBA")
    os.environ["DETGENS_NUMBA"] = flag
    try:
        return best(fn, repeat)
    finally:
        if old is None:
            del os.environ["DETGENS_NUMBA"]
        else:
            os.environ["DETGENS_NUMBA"] = old


def pair_workload(rows, cols, seed=0):
    rng = np.random.default_rng(seed)
    L = rng.integers(0, 4, size=(rows, cols)).astype(np.int64)

    def run():
        kept = 0
        for h in range(1, rows):
            keep, _ = _kernels.pair_candidates(L, h)
            kept += int(np.count_nonzero(keep))
        return kept
    return run


def stale_workload(rows, cols, seed=1):
    rng = np.random.default_rng(seed)
    L = rng.integers(0, 4, size=(rows, cols)).astype(np.int64)
    pi, pj = np.triu_indices(rows - 1, 1)
    pi, pj = pi.astype(np.int64), pj.astype(np.int64)
    plcm = np.maximum(L[pi], L[pj])

    def run():
        return int(np.count_nonzero(_kernels.stale_pairs(L, pi, pj, plcm, rows - 1)))
    return run


def gb_workload(gens):
    def run():
        return buchberger(gens).basis
    return run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-six", action="store_true", help="skip the 2x5 certification row")
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        sys.exit("numba is not installed; nothing to compare")

    X3 = sparse3x3(GF)
    _, g3 = antidiagonal_reduce(X3)
    X6 = power2x5(GF)
    _, g6 = reduce_disjoint_sets(X6, power_relations(GF), [["y2", "y1"]] * 3)
    rows = [
        ("pair criteria, 400 x 8 exponents", pair_workload(400, 8)),
        ("stale-pair test, 600 x 8 exponents", stale_workload(600, 8)),
        ("GB of the 3x3 sparse t-minors", gb_workload(t_minors(X3))),
        ("GB of the 2x5 power-matrix generators", gb_workload(g6.polys)),
        ("certify 3x3 sparse example", lambda: radical_equal(t_minors(X3), g3.polys).outcome),
    ]
    if not args.skip_six:
        rows.append(("certify 2x5 power-matrix example",
                     lambda: radical_equal(t_minors(X6), g6.polys).outcome))

    for _, fn in rows[:2]:
        with_flag("1", fn, 1)  # compile
    with_flag("1", rows[2][1], 1)

    print(f"{'workload':<42} {'numba':>9} {'fallback':>9} {'speedup':>8}  same")
    for name, fn in rows:
        tn, on = with_flag("1", fn, args.repeat)
        tf, of = with_flag("0", fn, 1 if "certify 2x5" in name else args.repeat)
        print(f"{name:<42} {tn:>8.3f}s {tf:>8.3f}s {tf / tn:>7.1f}x  {on == of}")


if __name__ == "__main__":
    main()
