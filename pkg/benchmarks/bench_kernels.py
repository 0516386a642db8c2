"""Compare the compiled and pure-Python witness kernels.

The workload is a full label-set scan over dual pairs, where no guess is
accepted and every set up to the default bound gets checked.

    python benchmarks/bench_kernels.py --vertices 12 --edges 6 --repeat 3
"""
import argparse
import random
import time

from hyperdual import kernel
from hyperdual.core import Instance
from hyperdual.generators import random_simple
from hyperdual.labels import count_label_sets, default_guess_bound, label_universe
from hyperdual.oracle import brute_force_tr
from hyperdual.solver import build_kernel


def make_dual_pair(n: int, m: int, seed: int) -> Instance:
    rng = random.Random(seed)
    while True:
        g = random_simple(rng, n, m, max_edge=4)
        h = brute_force_tr(g, "berge")
        if 2 <= len(h) <= 40:
            return Instance(g, h)


def full_scan(kern, bound: int) -> int:
    tried = 0
    for k in range(bound + 1):
        idx, _, count = kern.scan(k, 0, kern.num_labels)
        tried += count
        assert idx is None
    return tried


def time_backend(cls, i: Instance, repeat: int) -> tuple[float, int]:
    universe = label_universe(i)
    kern = build_kernel(i, universe, cls)
    bound = default_guess_bound(i)
    best = float("inf")
    tried = 0
    for _ in range(repeat):
        start = time.perf_counter()
        tried = full_scan(kern, bound)
        best = min(best, time.perf_counter() - start)
    return best, tried


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--vertices", type=int, default=12)
    p.add_argument("--edges", type=int, default=6)
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)

    compiled = kernel.compiled_kernel()
    if compiled is None:
        print("compiled kernel not available; only the Python fallback can be timed")
    print(f"{'seed':>4} {'|H|':>4} {'labels':>6} {'sets':>9} {'python s':>9} "
          f"{'compiled s':>10} {'speedup':>8}")
    for seed in range(args.seeds):
        i = make_dual_pair(args.vertices, args.edges, seed)
        L = len(label_universe(i))
        expected = count_label_sets(L, default_guess_bound(i))
        py_t, py_n = time_backend(kernel.PyKernel, i, args.repeat)
        assert py_n == expected
        if compiled is not None:
            c_t, c_n = time_backend(compiled, i, args.repeat)
            assert c_n == expected
            print(f"{seed:>4} {len(i.h):>4} {L:>6} {expected:>9} {py_t:>9.3f} "
                  f"{c_t:>10.4f} {py_t / c_t:>7.1f}x")
        else:
            print(f"{seed:>4} {len(i.h):>4} {L:>6} {expected:>9} {py_t:>9.3f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
