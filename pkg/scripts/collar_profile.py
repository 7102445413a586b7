"""Distance from nu to nu_boundary along the collar rays t = eps * 2**-k.

Prints one row per random stratum point and a summary of the decay rate.
Usage: python3 scripts/collar_profile.py [--samples N] [--seed N] [--bump linear|smooth]
"""

import argparse
import math
import random

from operadlab.fm_operad import default_epsilon
from operadlab.homotopy_map import BUMPS, CollarParams, collar_profile
from operadlab.sampling import random_decorated_tree


def main() -> int:
    parser = argparse.ArgumentParser(description="collar continuity profile")
    parser.add_argument("--samples", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--bump", choices=BUMPS, default="linear")
    args = parser.parse_args()
    rng = random.Random(args.seed)
    ratios = []
    print("n codim  " + " ".join(f"k={k:<6d}" for k in range(1, 11)))
    for _ in range(args.samples):
        n = rng.randint(3, 6)
        p = random_decorated_tree(n, rng, codim=rng.randint(1, n - 2))
        prof = collar_profile(p, default_epsilon(p), params=CollarParams(bump=args.bump))
        print(f"{n} {p.edge_count:5d}  " + " ".join(f"{d:.1e}" for d in prof))
        ratios += [b / a for a, b in zip(prof, prof[1:]) if a > 0]
    mean = math.fsum(ratios) / len(ratios)
    print(f"mean ratio between successive k: {mean:.3f} (1/2 means linear decay in t)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
