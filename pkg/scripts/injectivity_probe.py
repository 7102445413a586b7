"""Numerical injectivity probe of the chart map around random stratum points.

A minimum ratio (image distance / parameter distance) bounded away from zero
is consistent with the chart being injective near the stratum.
Usage: python3 scripts/injectivity_probe.py [--points N] [--seed N]
"""

import argparse
import json
import random

from operadlab.fm_operad import default_epsilon, injectivity_probe
from operadlab.sampling import random_decorated_tree


def main() -> int:
    parser = argparse.ArgumentParser(description="chart injectivity probe")
    parser.add_argument("--points", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    for idx in range(args.points):
        n = rng.randint(3, 5)
        p = random_decorated_tree(n, rng, codim=1)
        eps = default_epsilon(p)
        grid = [eps * f for f in (0.0, 0.25, 0.5, 0.75)]
        rep = injectivity_probe(p, radius=0.02, scale_grid=grid, samples=6, seed=args.seed + idx)
        print(json.dumps({"n": n, **rep.to_json()}))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
