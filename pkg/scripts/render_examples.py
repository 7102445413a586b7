"""Write SVG pictures of sample configurations, including nu and mu outputs.

Usage: python3 scripts/render_examples.py [--out DIR] [--seed N]
"""

import argparse
import random
from pathlib import Path

from operadlab.homotopy_map import mu, nu
from operadlab.render import render_svg
from operadlab.sampling import random_chart_point, random_colored_chart_point, random_disks, random_sc


def main() -> int:
    parser = argparse.ArgumentParser(description="render example configurations")
    parser.add_argument("--out", default="results/svg")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)
    pictures = {
        "disks_5": random_disks(5, rng),
        "swiss_cheese_2_2": random_sc(2, 2, rng),
        "nu_interior_5": nu(random_chart_point(5, rng, codim=0)),
        "nu_collar_5": nu(random_chart_point(5, rng, codim=2)),
        "mu_2_1": mu(random_colored_chart_point(2, 1, rng)),
    }
    for name, cfg in pictures.items():
        path = out / f"{name}.svg"
        path.write_text(render_svg(cfg))
        print(path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
