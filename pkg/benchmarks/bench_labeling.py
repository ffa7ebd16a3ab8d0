"""Benchmark the grid-labeling backends (compiled vs pure Python).

Times ``label4`` on sign grids of the kind the nodal counter produces:
checkerboard-like nodal patterns of a high-frequency family sampled on
dyadic grids, with the zero-set samples masked out.  Run as::

    python3 benchmarks/bench_labeling.py [--levels 7 8 9 10] [--repeats 5]
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from robinsq.labeling import BACKEND, available_backends
from robinsq.nodal import ThetaFamily


def sign_grid(level: int) -> np.ndarray:
    fam = ThetaFamily.create(7, 9, math.atan2(7, 9), 0.01)
    n = (1 << level) + 1
    xs = np.linspace(0.0, math.pi, n)
    z = fam.eval_grid(xs, xs)
    scale = np.abs(z).max()
    signs = np.sign(z).astype(np.int8)
    signs[np.abs(z) <= 1e-12 * scale] = 0
    return signs


def bench(fn, signs: np.ndarray, repeats: int) -> tuple[float, int]:
    best = math.inf
    count = -1
    for _ in range(repeats):
        t0 = time.perf_counter()
        _, count = fn(signs)
        best = min(best, time.perf_counter() - t0)
    return best, count


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--levels", type=int, nargs="+", default=[7, 8, 9, 10])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    backends = available_backends()
    print(f"active backend: {BACKEND}; comparing: {', '.join(backends)}")
    print(f"{'level':>5} {'grid':>11} " + " ".join(f"{k:>12}" for k in backends)
          + f" {'speedup':>8}")
    for level in args.levels:
        signs = sign_grid(level)
        times = {}
        counts = set()
        for name, fn in backends.items():
            t, c = bench(fn, signs, args.repeats)
            times[name] = t
            counts.add(c)
        if len(counts) != 1:
            raise RuntimeError(f"backends disagree at level {level}: {counts}")
        n = signs.shape[0]
        cells = " ".join(f"{times[k] * 1e3:9.2f} ms" for k in backends)
        if "cython" in times and "pure" in times:
            speed = f"{times['pure'] / times['cython']:7.1f}x"
        else:
            speed = "     n/a"
        print(f"{level:>5} {n:>5}x{n:<5} {cells} {speed}  ({counts.pop()} components)")


if __name__ == "__main__":
    main()
