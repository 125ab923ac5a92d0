"""Compare the full Wick check with the local check and the subdivision test
on random instances, reporting counts of valid vectors and disagreements."""

import argparse
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from tropwick.delta_matroid import enumerate_even_delta_matroids
from tropwick.subdivision import is_even_dm_subdivision
from tropwick.wick import TropicalWickVector, check_wick_full, check_wick_local


@dataclass(frozen=True)
class Config:
    n: int = 4
    trials: int = 2000
    seed: int = 0
    subdivision: bool = True


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    supports = [sorted(M.bases) for M in enumerate_even_delta_matroids(cfg.n)]
    valid = local_bad = sub_bad = 0
    t0 = time.perf_counter()
    for _ in range(cfg.trials):
        bases = rng.choice(supports)
        p = TropicalWickVector.from_dict(cfg.n, {B: Fraction(rng.randint(-2, 2), rng.randint(1, 2))
                                                 for B in bases})
        full = check_wick_full(p)
        valid += full
        local_bad += full != check_wick_local(p)
        if cfg.subdivision:
            sub_bad += full != is_even_dm_subdivision(p)
    print(f"n={cfg.n} trials={cfg.trials} valid={valid} "
          f"local-disagreements={local_bad} subdivision-disagreements={sub_bad} "
          f"({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=Config.n, choices=(3, 4, 5))
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--no-subdivision", action="store_true")
    a = ap.parse_args()
    main(Config(a.n, a.trials, a.seed, not a.no_subdivision))
