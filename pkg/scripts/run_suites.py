"""Run every property suite and write one JSON report per suite.

Usage: python3 scripts/run_suites.py [--seed N] [--out DIR]
"""

import argparse
import json
import time
from pathlib import Path

from operadlab.suites import SUITES, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default="results/suites")
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name in SUITES:
        start = time.perf_counter()
        rep = run_suite(name, seed=args.seed)
        elapsed = time.perf_counter() - start
        (out / f"{name}.json").write_text(json.dumps(rep.to_json(), indent=1) + "\n")
        status = "PASS" if rep.passed else "FAIL"
        failed += not rep.passed
        print(f"{status} {name:13s} cases={rep.cases:6d} failures={len(rep.failures):3d} "
              f"max_error={rep.max_error:.2e} time={elapsed:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
