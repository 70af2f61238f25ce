"""Compare the compiled and pure-Python kernels on representative inputs.

    python benchmarks/bench_kernels.py [--n 4096] [--degree 64] [--repeat 3]
"""

import argparse
import time

import numpy as np

from rainbowsub import kernels
from rainbowsub.generators import random_colored
from rainbowsub.search import _sample_rounds, q_schedule


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def cases(n, degree, seed):
    g = random_colored(n, degree, seed)
    rng = np.random.default_rng(seed)
    order = rng.permutation(g.m).astype(np.int64)
    width = 2 * int(g.degrees().max()) - 1
    palette = np.arange(g.color_count, dtype=np.int64)
    rounds = _sample_rounds(rng, palette, q_schedule(0.5, 64), True)
    rptr = np.zeros(len(rounds) + 1, dtype=np.int64)
    np.cumsum([r.size for r in rounds], out=rptr[1:])
    rcolors = np.concatenate(rounds).astype(np.int64)
    forb = np.zeros(g.n, dtype=np.uint8)
    cptr, csrc, cdst = g.color_classes
    return g, {
        "greedy_color": lambda b: b.greedy_color(g.n, g.eu, g.ev, order, width),
        "peel": lambda b: b.peel(g.n, g.indptr, g.nbr),
        "reach_rounds": lambda b: b.reach_rounds(g.n, 0, cptr, csrc, cdst, rptr, rcolors, forb),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--n", type=int, default=4096)
    ap.add_argument("--degree", type=float, default=64)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if kernels.compiled_backend is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")
    g, work = cases(args.n, args.degree, args.seed)
    print(f"random_colored(n={g.n}, degree={args.degree}): m={g.m}, colors={g.color_count}")
    print(f"{'kernel':<14}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, fn in work.items():
        t_py = best_of(lambda: fn(kernels.python_backend), args.repeat)
        t_cy = best_of(lambda: fn(kernels.compiled_backend), args.repeat)
        print(f"{name:<14}{t_py:>12.4f}{t_cy:>12.4f}{t_py / t_cy:>9.1f}x")


if __name__ == "__main__":
    main()
