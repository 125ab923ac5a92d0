"""Count even Δ-matroids under several notions of isomorphism.

Shows which group action and which counting convention give the totals
11 (ground sets of size <= 4) and 35 (size <= 5).
"""

import argparse
import time
from dataclasses import dataclass
from itertools import permutations

from tropwick.delta_matroid import (
    MAX_ENUM_N,
    _act,
    enumerate_even_delta_matroids,
    has_dummy,
)


@dataclass(frozen=True)
class Config:
    max_n: int = 5


def orbit_count(n: int, with_twists: bool, with_duality: bool) -> int:
    raw = [frozenset(M.bases) for M in enumerate_even_delta_matroids(n)]
    group = [(p, D) for p in permutations(range(n))
             for D in (range(1 << n) if with_twists else ((0, (1 << n) - 1) if with_duality else (0,)))]
    seen, count = set(), 0
    for fam in raw:
        if fam in seen:
            continue
        count += 1
        seen |= {frozenset(_act(B, p, D) for B in fam) for p, D in group}
    return count


def main(cfg: Config):
    print(f"{'n':>2} {'raw':>6} {'perm':>6} {'perm+dual':>10} {'perm+twist':>11} {'dummy-free':>11} {'cumulative':>11}")
    total = 0
    for n in range(cfg.max_n + 1):
        t0 = time.perf_counter()
        raw = len(enumerate_even_delta_matroids(n))
        reps = enumerate_even_delta_matroids(n, up_to_iso=True)
        free = sum(not has_dummy(M) for M in reps)
        total += free
        print(f"{n:>2} {raw:>6} {orbit_count(n, False, False):>6} {orbit_count(n, False, True):>10} "
              f"{len(reps):>11} {free:>11} {total:>11}   ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n, choices=range(MAX_ENUM_N + 1))
    main(Config(ap.parse_args().max_n))
