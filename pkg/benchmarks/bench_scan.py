#!/usr/bin/env python3
"""Compare the pure-Python and compiled translation-scan kernels.

Runs both on growing triangles and rhombi, checks they return identical
(max overlap, shifts) answers, and prints a timing table. Usage:

    python3 benchmarks/bench_scan.py [--repeat N]
"""

import argparse
import sys
import time

from coinflip import _scan as pure
from coinflip.lattice import FlipKind
from coinflip.shapes import rhombus, triangle_up

try:
    from coinflip import _scan_cy as compiled
except ImportError:
    compiled = None


def prepare(shape, flip):
    start = sorted(shape)
    flipped = sorted(flip.apply(c) for c in start)
    return start, flipped


def best_time(fn, args, repeat):
    results = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        results.append(time.perf_counter() - t0)
    return min(results), out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--repeat", type=int, default=3, help="timings per case (min wins)")
    args = parser.parse_args(argv)

    if compiled is None:
        print("compiled kernel (coinflip._scan_cy) is not built; nothing to compare")
        print("reinstall with a working C++ toolchain to benchmark it")
        return 1

    cases = [("triangle", triangle_up(n), FlipKind.ROTATE_180) for n in (10, 20, 40, 60, 80)]
    cases += [("rhombus", rhombus(n), FlipKind.MIRROR_HORIZONTAL) for n in (10, 20, 40, 60)]

    print(f"{'case':<14} {'coins':>6} {'pairs':>12} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for label, shape, flip in cases:
        pts = prepare(shape, flip)
        n = len(pts[0])
        t_pure, r_pure = best_time(pure.scan_pairs, pts, args.repeat)
        t_comp, r_comp = best_time(compiled.scan_pairs, pts, args.repeat)
        if r_pure != r_comp:
            print(f"MISMATCH on {label} {n} coins: pure={r_pure[0]} compiled={r_comp[0]}")
            return 1
        print(
            f"{label:<14} {n:>6} {n * n:>12} {t_pure * 1e3:>8.1f}ms {t_comp * 1e3:>8.1f}ms "
            f"{t_pure / t_comp:>7.1f}x"
        )
    print("kernels agree on every case")
    return 0


if __name__ == "__main__":
    sys.exit(main())
