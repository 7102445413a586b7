"""Command-line interface: ``operadlab <command> ...`` (or ``python -m operadlab``).

Inputs are JSON files (``-`` or omitted = standard input); outputs go to
standard output or ``--out``.  Exit codes: 0 success, 1 domain error (a JSON
description is written to standard error; a failing ``check`` also exits 1),
2 usage error.

Environment variables OPERADLAB_TOL_GEO and OPERADLAB_SEED supply defaults
for --tol-geo and --seed; explicit flags win.

SVG convention: the unit disk is drawn on the square [margin, size - margin]^2
with the y axis pointing up (flipped relative to SVG coordinates).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import homotopy_map as hm
from . import little_disks as ld
from . import swiss_cheese as sc
from . import tolerance
from .config_space import normalize
from .errors import OperadLabError, ParameterError
from .fm_operad import ChartPoint, ColoredChartPoint, evaluate_chart
from .render import RenderOptions, render_svg
from .sampling import KINDS, random_config
from .serialize import (
    chart_from_json,
    colored_tree_from_json,
    disks_from_json,
    from_json,
    points_from_json,
    sc_from_json,
    to_json,
    tree_from_json,
    tree_to_json,
)
from .suites import SUITES, run_suite
from .trees import ColoredTree, colored_stratum_dimension, enumerate_trees, face_poset, stratum_dimension


class CommandFailed(Exception):
    """A command ran but its result is a failure (exit code 1, output still written)."""


def _read(path: str | None) -> Any:
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParameterError("could not read JSON input", path=path, reason=str(exc)) from exc


def _json(value: Any) -> str:
    return json.dumps(value) + "\n"


def _collar(args) -> hm.CollarParams:
    return hm.CollarParams(epsilon=args.epsilon, bump=args.bump)


def cmd_normalize(args) -> str:
    return _json(to_json(normalize(points_from_json(_read(args.input)))))


def cmd_compose_disks(args) -> str:
    a, b = disks_from_json(_read(args.outer)), disks_from_json(_read(args.inner))
    out = ld.compose(a, args.slot, b)
    if not args.no_validate:
        ld.require_valid(out)
    return _json(to_json(out))


def cmd_compose_sc(args) -> str:
    outer = sc_from_json(_read(args.outer))
    if args.color == "closed":
        out = sc.compose_closed(outer, args.slot, disks_from_json(_read(args.inner)))
    else:
        out = sc.compose_open(outer, args.slot, sc_from_json(_read(args.inner)))
    return _json(to_json(out))


def cmd_enumerate_strata(args) -> str:
    trees = enumerate_trees(args.n, args.k, bound=args.bound)
    if args.count_only:
        return f"{len(trees)}\n"
    return _json([tree_to_json(t) for t in trees])


def cmd_stratum_dim(args) -> str:
    obj = _read(args.input)
    tree = colored_tree_from_json(obj) if _has_open(obj) else tree_from_json(obj)
    if isinstance(tree, ColoredTree):
        return f"{colored_stratum_dimension(tree)}\n"
    if isinstance(tree, int):
        return "0\n"
    return f"{stratum_dimension(tree)}\n"


def _has_open(obj: Any) -> bool:
    if isinstance(obj, dict):
        return obj.get("color") == "o" or "leaf" in obj or any(_has_open(c) for c in obj.get("children", ()))
    return False


def cmd_poset(args) -> str:
    return face_poset(args.n, bound=args.bound).to_dot()


def _chart(args) -> ChartPoint | ColoredChartPoint:
    cp = chart_from_json(_read(args.input))
    return cp


def cmd_eval_chart(args) -> str:
    cp = _chart(args)
    if isinstance(cp, ColoredChartPoint):
        raise ParameterError("eval-chart takes an uncoloured chart point")
    return _json(to_json(evaluate_chart(cp)))


def cmd_apply_nu(args) -> str:
    cp = _chart(args)
    if isinstance(cp, ColoredChartPoint):
        raise ParameterError("apply-nu takes an uncoloured chart point; use apply-mu")
    return _json(to_json(hm.nu(cp, _collar(args))))


def cmd_apply_mu(args) -> str:
    cp = _chart(args)
    if isinstance(cp, ChartPoint):
        return _json(to_json(hm.nu(cp, _collar(args))))
    return _json(to_json(hm.mu(cp, _collar(args))))


def cmd_random(args) -> str:
    return _json(to_json(random_config(args.kind, args.size, args.seed)))


def cmd_render(args) -> str:
    obj = _read(args.input)
    cfg = from_json(obj)
    if not isinstance(cfg, (ld.DiskConfiguration, sc.SCConfiguration)):
        raise ParameterError("render takes a disk or Swiss-cheese configuration")
    opts = RenderOptions(width=args.width, height=args.height, labels=not args.no_labels, shade_mirrors=not args.no_shade)
    return render_svg(cfg, opts)


def cmd_check(args) -> str:
    report = run_suite(args.suite, cases=args.cases, seed=args.seed)
    text = _json(report.to_json())
    if not report.passed:
        raise CommandFailed(text)
    return text


def _env_float(name: str) -> float | None:
    raw = os.environ.get(name)
    return None if raw in (None, "") else float(raw)


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    return None if raw in (None, "") else int(raw)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps subcommand-level defaults from overwriting flags given before the command
    common.add_argument("--tol-geo", type=float, default=argparse.SUPPRESS, help="geometric tolerance (default 1e-9)")
    common.add_argument("--tol-norm", type=float, default=argparse.SUPPRESS, help="normal-form tolerance (default 1e-12)")
    common.add_argument("--epsilon", type=float, default=argparse.SUPPRESS, help="collar width override")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default 0)")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output to this file")

    parser = argparse.ArgumentParser(
        prog="operadlab",
        description="Little disks, Swiss-cheese and Fulton-MacPherson configurations.",
        epilog="SVG output maps the unit disk onto [margin, size - margin]^2 with the y axis flipped.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, parents=[common])
        p.set_defaults(func=fn)
        return p

    p = add("normalize", cmd_normalize, "normal form of a point configuration")
    p.add_argument("input", nargs="?")

    p = add("compose-disks", cmd_compose_disks, "D2 composition outer o_slot inner")
    p.add_argument("outer")
    p.add_argument("slot", type=int)
    p.add_argument("inner")
    p.add_argument("--no-validate", action="store_true", help="skip the validity check of the result")

    p = add("compose-sc", cmd_compose_sc, "Swiss-cheese composition into a closed or open slot")
    p.add_argument("outer")
    p.add_argument("color", choices=("closed", "open"))
    p.add_argument("slot", type=int)
    p.add_argument("inner")

    p = add("enumerate-strata", cmd_enumerate_strata, "trees with n leaves and k internal edges")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--bound", type=int, default=8)

    p = add("stratum-dim", cmd_stratum_dim, "dimension of the stratum of a tree")
    p.add_argument("input", nargs="?")

    p = add("poset", cmd_poset, "face poset of the strata as DOT")
    p.add_argument("n", type=int)
    p.add_argument("--bound", type=int, default=6)

    for name, fn, text in (
        ("eval-chart", cmd_eval_chart, "evaluate a chart point"),
        ("apply-nu", cmd_apply_nu, "apply nu to a chart point"),
        ("apply-mu", cmd_apply_mu, "apply mu to a coloured chart point"),
    ):
        p = add(name, fn, text)
        p.add_argument("input", nargs="?")
        p.add_argument("--bump", choices=hm.BUMPS, default="linear")

    p = add("random", cmd_random, "random configuration of a given kind")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("size", type=int, nargs="+")

    p = add("render", cmd_render, "SVG picture of a disk or Swiss-cheese configuration")
    p.add_argument("input", nargs="?")
    p.add_argument("--width", type=int, default=400)
    p.add_argument("--height", type=int, default=400)
    p.add_argument("--no-labels", action="store_true")
    p.add_argument("--no-shade", action="store_true")

    p = add("check", cmd_check, "run a property suite and print its report")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--cases", type=int)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name, env, conv in (("tol_geo", "OPERADLAB_TOL_GEO", _env_float), ("seed", "OPERADLAB_SEED", _env_int)):
        if not hasattr(args, name):
            try:
                setattr(args, name, conv(env))
            except ValueError:
                parser.print_usage(sys.stderr)
                print(f"operadlab: error: {env} is not a number", file=sys.stderr)
                return 2
    defaults = {"tol_geo": None, "tol_norm": None, "epsilon": None, "seed": None, "out": None}
    for name, value in defaults.items():
        if not hasattr(args, name):
            setattr(args, name, value)
    if args.seed is None:
        args.seed = 0
    overrides = {k: v for k, v in (("tol_geo", args.tol_geo), ("tol_norm", args.tol_norm)) if v is not None}
    status = 0
    try:
        with tolerance.using(**overrides):
            text = args.func(args)
    except CommandFailed as failed:
        text, status = failed.args[0], 1
    except OperadLabError as exc:
        print(json.dumps(exc.to_json()), file=sys.stderr)
        return 1
    except ValueError as exc:
        print(json.dumps({"error": "value", "message": str(exc), "details": {}}), file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
