"""Seeded random generators for every domain type.

All samplers take a ``random.Random`` and use rejection sampling with at
most ``MAX_ATTEMPTS`` tries before raising `SamplingExhaustedError`.
"""

from __future__ import annotations

import math
import random
from typing import Sequence

from .config_space import (
    HalfPlaneConfiguration,
    NormalizedConfiguration,
    doubled_normal_form,
    min_pairwise_distance,
    normalize,
)
from .errors import ArityError, ParameterError, SamplingExhaustedError
from .fm_operad import (
    ChartPoint,
    ColoredChartPoint,
    ColoredDecoratedTree,
    DecoratedTree,
    decorate,
    decorate_colored,
    default_colored_epsilon,
    default_epsilon,
)
from .little_disks import Disk, DiskConfiguration
from .swiss_cheese import SCConfiguration
from .trees import ColoredLeaf, ColoredTree, LabeledTree, enumerate_colored_trees, enumerate_trees

MAX_ATTEMPTS = 1000
MIN_SEPARATION = 0.05  # smallest pairwise distance accepted in a sampled normal form
KINDS = ("points", "disks", "sc", "decorated-tree", "chart", "colored-chart")


def _unit_disk_point(rng: random.Random, radius: float = 1.0) -> complex:
    r = radius * math.sqrt(rng.random())
    a = rng.uniform(0.0, 2.0 * math.pi)
    return complex(r * math.cos(a), r * math.sin(a))


def random_points(n: int, rng: random.Random, min_separation: float = MIN_SEPARATION) -> NormalizedConfiguration:
    if n < 2:
        raise ArityError("normal forms need n >= 2", n=n)
    for _ in range(MAX_ATTEMPTS):
        cfg = normalize([_unit_disk_point(rng) for _ in range(n)])
        if min_pairwise_distance(cfg.points) >= min_separation:
            return cfg
    raise SamplingExhaustedError("no well-separated configuration found", n=n, attempts=MAX_ATTEMPTS)


def random_half_plane(p: int, q: int, rng: random.Random, min_separation: float = MIN_SEPARATION) -> NormalizedConfiguration:
    """Doubled normal form of a random point of Conf(p, q)."""
    for _ in range(MAX_ATTEMPTS):
        interior = tuple(complex(rng.uniform(-1, 1), rng.uniform(0.05, 1)) for _ in range(p))
        boundary = tuple(complex(rng.uniform(-1, 1), 0.0) for _ in range(q))
        try:
            cfg = doubled_normal_form(HalfPlaneConfiguration(interior, boundary))
        except ValueError:
            continue
        if min_pairwise_distance(cfg.points) >= min_separation:
            return cfg
    raise SamplingExhaustedError("no well-separated half-plane configuration found", p=p, q=q)


def _radii(centers: Sequence[complex], rng: random.Random, fill: tuple[float, float]) -> list[float]:
    out = []
    for i, c in enumerate(centers):
        room = 1.0 - abs(c)
        for j, w in enumerate(centers):
            if j != i:
                room = min(room, abs(c - w) / 2)
        out.append(rng.uniform(*fill) * room)
    return out


def random_disks(n: int, rng: random.Random, fill: tuple[float, float] = (0.3, 1.0)) -> DiskConfiguration:
    """Valid configuration: each radius is a random fraction of its free room."""
    if n < 1:
        raise ArityError("D2(0) is empty", n=n)
    for _ in range(MAX_ATTEMPTS):
        centers = [_unit_disk_point(rng, 0.9) for _ in range(n)]
        if n > 1 and min_pairwise_distance(centers) < 1e-3:
            continue
        radii = _radii(centers, rng, fill)
        if min(radii) <= 1e-6:
            continue
        return DiskConfiguration(tuple(Disk(c, r) for c, r in zip(centers, radii)))
    raise SamplingExhaustedError("no disk configuration found", n=n)


def random_sc(n: int, m: int, rng: random.Random, fill: tuple[float, float] = (0.3, 1.0)) -> SCConfiguration:
    if n + m < 1:
        raise ArityError("SC(0, 0) is empty")
    for _ in range(MAX_ATTEMPTS):
        upper = [_unit_disk_point(rng, 0.9) for _ in range(n)]
        upper = [complex(z.real, abs(z.imag)) for z in upper]
        opened = [complex(rng.uniform(-0.9, 0.9), 0.0) for _ in range(m)]
        centers = upper + [z.conjugate() for z in upper] + opened
        if any(z.imag < 1e-3 for z in upper) or (len(centers) > 1 and min_pairwise_distance(centers) < 1e-3):
            continue
        radii = _radii(centers, rng, fill)
        # mirrors share the radius of their closed disk
        closed_r = [min(radii[k], radii[k + n]) for k in range(n)]
        open_r = radii[2 * n :]
        if min(closed_r + open_r) <= 1e-6:
            continue
        return SCConfiguration(
            tuple(Disk(c, r) for c, r in zip(upper, closed_r)), tuple(Disk(c, r) for c, r in zip(opened, open_r))
        )
    raise SamplingExhaustedError("no Swiss-cheese configuration found", n=n, m=m)


def random_tree(n: int, rng: random.Random, codim: int | None = None) -> LabeledTree:
    """Uniform codimension (unless given), then a uniform tree of that codimension."""
    if n < 2:
        raise ArityError("trees with decorations need n >= 2", n=n)
    k = rng.randint(0, n - 2) if codim is None else codim
    trees = enumerate_trees(n, k)
    if not trees:
        raise ParameterError("no trees of this codimension", n=n, k=k)
    return rng.choice(trees)


def decorate_randomly(tree: LabeledTree, rng: random.Random) -> DecoratedTree:
    children = [c if isinstance(c, int) else decorate_randomly(c, rng) for c in tree.children]
    return decorate(children, random_points(len(children), rng).points)


def random_decorated_tree(n: int, rng: random.Random, codim: int | None = None) -> DecoratedTree:
    return decorate_randomly(random_tree(n, rng, codim), rng)


def random_chart_point(
    n: int, rng: random.Random, codim: int | None = None, scale_range: tuple[float, float] = (0.0, 1.0)
) -> ChartPoint:
    """Chart point with scales ``epsilon * U(scale_range)`` per edge (all positive when the range starts above 0)."""
    p = random_decorated_tree(n, rng, codim)
    eps = default_epsilon(p)
    lo, hi = scale_range
    scales = []
    for _ in range(p.edge_count):
        t = eps * rng.uniform(lo, hi)
        scales.append(t if t > 0 else eps * 1e-3)
    return ChartPoint(p, tuple(scales), eps)


def random_collar_point(n: int, rng: random.Random) -> ChartPoint:
    """A chart point with at least one edge and every scale in (0, epsilon)."""
    return random_chart_point(n, rng, codim=rng.randint(1, n - 2), scale_range=(0.0, 1.0))


def decorate_colored_randomly(tree: ColoredTree, rng: random.Random) -> ColoredDecoratedTree:
    children = [c if isinstance(c, ColoredLeaf) else decorate_colored_randomly(c, rng) for c in tree.children]
    if tree.color == "c":
        pts = random_points(len(children), rng).points
    else:
        a, b = tree.inputs()
        pts = random_half_plane(a, b, rng).points
    return decorate_colored(tree.color, children, pts)


def random_colored_chart_point(
    p: int, q: int, rng: random.Random, color: str = "o", scale_range: tuple[float, float] = (0.0, 1.0)
) -> ColoredChartPoint:
    trees = [t for t in enumerate_colored_trees(p, q, color) if not t.is_unit()]
    if not trees:
        raise ParameterError("no decorated coloured trees of this type", p=p, q=q, color=color)
    point = decorate_colored_randomly(rng.choice(trees), rng)
    eps = default_colored_epsilon(point)
    lo, hi = scale_range
    scales = []
    for _ in range(point.edge_count):
        t = eps * rng.uniform(lo, hi)
        scales.append(t if t > 0 else eps * 1e-3)
    return ColoredChartPoint(point, tuple(scales), eps)


def random_config(kind: str, size: Sequence[int] | int, seed: int):
    """Entry point used by the CLI; ``size`` is ``n`` or ``(n, m)`` / ``(p, q)``."""
    rng = random.Random(seed)
    sizes = (size,) if isinstance(size, int) else tuple(size)
    if kind == "points":
        return random_points(sizes[0], rng)
    if kind == "disks":
        return random_disks(sizes[0], rng)
    if kind == "sc":
        return random_sc(sizes[0], sizes[1] if len(sizes) > 1 else 0, rng)
    if kind == "decorated-tree":
        return random_decorated_tree(sizes[0], rng)
    if kind == "chart":
        return random_chart_point(sizes[0], rng, scale_range=(0.0, 1.0))
    if kind == "colored-chart":
        return random_colored_chart_point(sizes[0], sizes[1] if len(sizes) > 1 else 0, rng)
    raise ParameterError("unknown kind", kind=kind, choices=list(KINDS))
