"""Time the pure-Python census kernels against the compiled extension.

Usage:  python benchmarks/bench_censuses.py [--max-n 9]

Each row sweeps all n! permutations of one board.  Outputs are checked
for equality between the two backends before timing is reported.
"""

import argparse
import time

from qyt import _kernels
from qyt.board import FerrersBoard
from qyt.partition import Partition

SHAPES = {
    5: (3, 2),
    6: (3, 2, 1),
    7: (3, 2, 2),
    8: (4, 3, 1),
    9: (4, 3, 2),
    10: (4, 3, 2, 1),
}


def _time(fn, *args):
    started = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - started


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=9, choices=sorted(SHAPES))
    args = parser.parse_args()

    have_compiled = _kernels.compiled_available()
    if not have_compiled:
        print("compiled kernels unavailable; timing pure Python only")
    print(f"{'kernel':8} {'n':>2} {'board':22} {'pure ms':>10} {'compiled ms':>12} {'speedup':>8}")
    for n in sorted(SHAPES):
        if n > args.max_n:
            break
        board = FerrersBoard.from_partition(Partition(SHAPES[n]))
        for name, fn in (("hit", _kernels.hit_census), ("q-hit", _kernels.q_hit_census)):
            pure, t_pure = _time(fn, n, board.heights, "pure")
            if have_compiled:
                fast, t_fast = _time(fn, n, board.heights, "compiled")
                if pure != fast:
                    print(f"MISMATCH for {name} on {board}")
                    return 1
                print(
                    f"{name:8} {n:>2} {str(board.heights):22} "
                    f"{t_pure * 1000:>10.1f} {t_fast * 1000:>12.1f} "
                    f"{t_pure / t_fast:>7.1f}x"
                )
            else:
                print(
                    f"{name:8} {n:>2} {str(board.heights):22} "
                    f"{t_pure * 1000:>10.1f} {'-':>12} {'-':>8}"
                )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
