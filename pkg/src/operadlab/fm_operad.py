"""Points of the Fulton-MacPherson operad F2 as decorated trees, and the
Axelrod-Singer charts built from the insertion maps gamma_i.

A stratum point is a tree whose internal vertices carry normal-form
configurations, one point per child.  A chart point adds one scale
``t_e >= 0`` per internal edge: ``t_e`` is the size of the child cluster
relative to the normal-form frame of its parent.  Evaluating the chart
replaces the child vertex by its points, shrunk by ``t_e``, at the parent's
slot; nested edges therefore multiply along root-to-leaf paths.

Coloured (open/closed) stratum points of H2 are handled through their
doubled image: each closed subtree hanging off an open vertex is repeated
with conjugated decorations, with mirror leaves labelled ``p + k``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

from . import tolerance
from .config_space import (
    NormalizedConfiguration,
    Permutation,
    PointConfiguration,
    max_distance,
    normalize,
    phi_pairing,
    symmetry_defect,
)
from .errors import ChartDomainError, ParameterError, SizeMismatchError, SlotError, TreeError
from .trees import ColoredLeaf, ColoredTree, LabeledTree, check_colored, make_colored, make_tree

DEFAULT_EPSILON_CAP = 0.1

DecoratedSubtree = Union["DecoratedTree", int]


def _min_leaf(t) -> int:
    return t if isinstance(t, int) else t.min_leaf


@dataclass(frozen=True)
class DecoratedTree:
    """A vertex with its decoration; ``config.points[k]`` belongs to ``children[k]``.

    The unit (one leaf) is the only vertex without a decoration.
    """

    children: tuple[DecoratedSubtree, ...]
    config: NormalizedConfiguration | None

    def __post_init__(self):
        if self.config is None:
            if self.children != (1,):
                raise TreeError("only the unit may be undecorated")
            return
        if len(self.config) != len(self.children):
            raise SizeMismatchError("decoration size must equal arity", arity=len(self.children), size=len(self.config))

    @cached_property
    def min_leaf(self) -> int:
        return min(_min_leaf(c) for c in self.children)

    @cached_property
    def leaves(self) -> tuple[int, ...]:
        out: list[int] = []
        for c in self.children:
            out.extend([c] if isinstance(c, int) else c.leaves)
        return tuple(sorted(out))

    @property
    def n(self) -> int:
        return len(self.leaves)

    def is_unit(self) -> bool:
        return self.config is None

    @cached_property
    def tree(self) -> LabeledTree:
        return LabeledTree(tuple(c if isinstance(c, int) else c.tree for c in self.children))

    def vertices(self) -> list[DecoratedTree]:
        out: list[DecoratedTree] = []

        def walk(v: DecoratedTree) -> None:
            out.append(v)
            for c in v.children:
                if isinstance(c, DecoratedTree):
                    walk(c)

        walk(self)
        return out

    @property
    def edge_count(self) -> int:
        return len(self.vertices()) - 1

    def leaf_order(self) -> list[int]:
        """Leaf labels in depth-first order of the canonical tree."""
        out: list[int] = []
        for c in self.children:
            out.extend([c] if isinstance(c, int) else c.leaf_order())
        return out


def decorate(children: Sequence[DecoratedSubtree], points: Sequence[complex]) -> DecoratedTree:
    """Build a decorated vertex, sorting children (and their points) canonically."""
    pairs = sorted(zip(children, points), key=lambda cp: _min_leaf(cp[0]))
    return DecoratedTree(tuple(c for c, _ in pairs), NormalizedConfiguration(tuple(z for _, z in pairs)))


def decorated_corolla(cfg: NormalizedConfiguration) -> DecoratedTree:
    return DecoratedTree(tuple(range(1, len(cfg) + 1)), cfg)


def unit() -> DecoratedTree:
    return DecoratedTree((1,), None)


# Mutable working form: ``[children, points, scale]`` with scale of the edge above.


class _Node:
    __slots__ = ("children", "points", "scale")

    def __init__(self, children, points, scale):
        self.children = children
        self.points = points
        self.scale = scale


def _unpack(p: DecoratedTree, scales: Sequence[float] | None = None) -> _Node:
    it = iter(scales or ())

    def walk(v: DecoratedTree, scale) -> _Node:
        children = []
        for c in v.children:
            children.append(c if isinstance(c, int) else walk(c, next(it) if scales is not None else 0.0))
        return _Node(children, list(v.config.points), scale)

    return walk(p, None)


def _pack(node: _Node) -> tuple[DecoratedTree, list[float]]:
    """Canonicalise a working tree; returns the tree and its scales in edge order."""
    items = []
    for c, z in zip(node.children, node.points):
        if isinstance(c, int):
            items.append((c, c, z, []))
        else:
            sub, sub_scales = _pack(c)
            items.append((sub.min_leaf, sub, z, [c.scale] + sub_scales))
    items.sort(key=lambda it: it[0])
    tree = DecoratedTree(tuple(it[1] for it in items), NormalizedConfiguration(tuple(it[2] for it in items)))
    scales = [s for it in items for s in it[3]]
    return tree, scales


@dataclass(frozen=True)
class ChartPoint:
    """A stratum point together with per-edge scales and a collar width."""

    point: DecoratedTree
    scales: tuple[float, ...]
    epsilon: float

    def __post_init__(self):
        scales = tuple(float(t) for t in self.scales)
        object.__setattr__(self, "scales", scales)
        k = 0 if self.point.is_unit() else self.point.edge_count
        if len(scales) != k:
            raise SizeMismatchError("one scale per internal edge", edges=k, scales=len(scales))
        if any(not (math.isfinite(t) and t >= 0) for t in scales):
            raise ParameterError("scales must be finite and non-negative", scales=list(scales))
        if not (math.isfinite(self.epsilon) and self.epsilon > 0):
            raise ParameterError("collar width must be positive", epsilon=self.epsilon)

    @classmethod
    def on_boundary(cls, point: DecoratedTree, epsilon: float | None = None) -> ChartPoint:
        eps = default_epsilon(point) if epsilon is None else epsilon
        k = 0 if point.is_unit() else point.edge_count
        return cls(point, (0.0,) * k, eps)

    def with_scales(self, scales: Sequence[float]) -> ChartPoint:
        return ChartPoint(self.point, tuple(scales), self.epsilon)

    @property
    def n(self) -> int:
        return self.point.n


def gamma_insert(
    x: PointConfiguration | Sequence[complex], y: PointConfiguration | Sequence[complex], i: int, t: float,
    tol: float | None = None,
) -> PointConfiguration | CollapsedConfiguration:
    """``(x_1, ..., x_{i-1}, x_i + t y_1, ..., x_i + t y_m, x_{i+1}, ...)``.

    ``t == 0`` yields a `CollapsedConfiguration` (a boundary value); a
    cluster point landing within ``tol_geo`` of another point raises
    `ChartDomainError`.
    """
    xs = tuple(x.points if isinstance(x, PointConfiguration) else x)
    ys = tuple(y.points if isinstance(y, PointConfiguration) else y)
    n1, m = len(xs), len(ys)
    if not 1 <= i <= n1:
        raise SlotError("insertion slot out of range", slot=i, arity=n1)
    if not (math.isfinite(t) and t >= 0):
        raise ParameterError("insertion scale must be non-negative", t=t)
    xi = xs[i - 1]
    cluster = tuple(complex(xi.real + t * w.real, xi.imag + t * w.imag) for w in ys)
    points = xs[: i - 1] + cluster + xs[i:]
    if t == 0:
        return CollapsedConfiguration(points, (i, i + m - 1))
    tol = tolerance.geo(tol)
    for a, w in enumerate(cluster):
        for b, z in enumerate(xs):
            if b != i - 1 and abs(w - z) <= tol:
                other = b + 1 if b < i - 1 else b + m
                raise ChartDomainError("inserted cluster collides with another point", pair=[i + a, other], t=t)
    return PointConfiguration(points)


@dataclass(frozen=True)
class CollapsedConfiguration:
    """Output of an insertion at scale 0: slots ``cluster[0]..cluster[1]`` coincide."""

    points: tuple[complex, ...]
    cluster: tuple[int, int]
    boundary: bool = True


def _collapse(node: _Node) -> tuple[list, list[complex]]:
    """Children and raw points of the component of positive edges rooted at ``node``."""
    children: list = []
    points: list[complex] = []
    for c, x in zip(node.children, node.points):
        if isinstance(c, _Node) and c.scale > 0:
            sub_children, sub_points = _collapse(c)
            t = c.scale
            children += sub_children
            points += [complex(x.real + t * w.real, x.imag + t * w.imag) for w in sub_points]
        else:
            children.append(_finish(c) if isinstance(c, _Node) else c)
            points.append(x)
    return children, points


def _finish(node: _Node) -> _Node:
    children, raw = _collapse(node)
    return _Node(children, list(normalize(raw).points), node.scale)


def _result(node: _Node) -> NormalizedConfiguration | DecoratedTree:
    tree, _ = _pack(node)
    if all(isinstance(c, int) for c in tree.children):
        return tree.config
    return tree


def evaluate_chart(cp: ChartPoint) -> NormalizedConfiguration | DecoratedTree:
    """The chart map: positive edges are contracted, zero edges stay.

    Interior results come back as a normal-form configuration in leaf-label
    order; anything still on the boundary comes back as a decorated tree.
    """
    if cp.point.is_unit():
        return cp.point
    if not any(t > 0 for t in cp.scales):
        if cp.point.edge_count == 0:
            return cp.point.config
        return cp.point
    _check_chart_domain(cp)
    return _result(_finish(_unpack(cp.point, cp.scales)))


def evaluate_chart_staged(cp: ChartPoint, rng: random.Random | None = None) -> NormalizedConfiguration | DecoratedTree:
    """Contract positive edges one at a time, re-normalising the merged vertex.

    Only an edge hanging directly off a component top (the root, or a vertex
    whose own edge has scale 0) is contracted; the remaining scales below the
    merged vertex are rescaled into its new normal-form frame.  ``rng``
    randomises the order among admissible edges.
    """
    if cp.point.is_unit():
        return cp.point
    root = _unpack(cp.point, cp.scales)
    while True:
        ready = []
        stack = [root]
        while stack:
            v = stack.pop()
            for c in v.children:
                if isinstance(c, _Node):
                    stack.append(c)
                    if c.scale > 0 and (v is root or v.scale == 0):
                        ready.append((v, c))
        if not ready:
            break
        parent, child = rng.choice(ready) if rng else ready[0]
        _merge(parent, child)
    tree, _ = _pack(root)
    if all(isinstance(c, int) for c in tree.children):
        return tree.config
    return tree


def _merge(parent: _Node, child: _Node) -> None:
    s = parent.children.index(child)
    t = child.scale
    x = parent.points[s]
    inserted = [complex(x.real + t * w.real, x.imag + t * w.imag) for w in child.points]
    for c in child.children:
        if isinstance(c, _Node):
            c.scale *= t
    parent.children[s : s + 1] = child.children
    parent.points[s : s + 1] = inserted
    raw = parent.points
    n = len(raw)
    cx = math.fsum(z.real for z in raw) / n
    cy = math.fsum(z.imag for z in raw) / n
    scale = math.sqrt(math.fsum((z.real - cx) ** 2 + (z.imag - cy) ** 2 for z in raw))
    parent.points = [complex((z.real - cx) / scale, (z.imag - cy) / scale) for z in raw]
    for c in parent.children:
        if isinstance(c, _Node):
            c.scale /= scale


def _check_chart_domain(cp: ChartPoint) -> None:
    """Reject scales that push a cluster onto a neighbouring point."""
    node = _unpack(cp.point, cp.scales)
    tol = tolerance.geo()

    def reach(v: _Node) -> float:
        return max(abs(z) + (c.scale * reach(c) if isinstance(c, _Node) else 0.0) for c, z in zip(v.children, v.points))

    def walk(v: _Node) -> None:
        for s, c in enumerate(v.children):
            if not isinstance(c, _Node):
                continue
            if c.scale > 0:
                gap = min((abs(v.points[s] - z) for k, z in enumerate(v.points) if k != s), default=math.inf)
                if c.scale * reach(c) >= gap - tol:
                    raise ChartDomainError(
                        "scale exceeds the chart domain", slot=s + 1, scale=c.scale, gap=gap, reach=reach(c)
                    )
            walk(c)

    walk(node)


def epsilon_max(p: DecoratedTree, cap: float = DEFAULT_EPSILON_CAP) -> float:
    """Estimated collision threshold of the chart around ``p``.

    For each internal edge: half the distance from the slot to the nearest
    other point of the parent, divided by the child's reach (its largest
    point norm plus the capped reach of its own subclusters).
    """
    if p.is_unit():
        return math.inf

    def extent(v: DecoratedTree) -> float:
        return max(
            abs(z) + (cap * extent(c) if isinstance(c, DecoratedTree) else 0.0) for c, z in zip(v.children, v.config.points)
        )

    best = math.inf
    for v in p.vertices():
        pts = v.config.points
        for s, c in enumerate(v.children):
            if isinstance(c, DecoratedTree):
                gap = min(abs(pts[s] - z) for k, z in enumerate(pts) if k != s)
                best = min(best, 0.5 * gap / extent(c))
    return best


def default_epsilon(p: DecoratedTree) -> float:
    return min(DEFAULT_EPSILON_CAP, epsilon_max(p) / 4)


def graft_decorated(p: DecoratedTree, i: int, q: DecoratedTree) -> DecoratedTree:
    """Operad composition of F2 on stratum points: the root of ``q`` replaces leaf ``i``."""
    n1, n2 = p.n, q.n
    if not 1 <= i <= n1:
        raise SlotError("graft slot out of range", slot=i, arity=n1)
    if q.is_unit():
        return p
    if p.is_unit():
        return q
    lower = relabel_decorated(q, lambda k: k + i - 1)

    def walk(v: DecoratedTree) -> DecoratedTree:
        children = []
        for c in v.children:
            if isinstance(c, int):
                children.append(lower if c == i else (c if c < i else c + n2 - 1))
            else:
                children.append(walk(c))
        return decorate(children, v.config.points)

    return walk(p)


def relabel_decorated(p: DecoratedTree, mapping) -> DecoratedTree:
    if p.is_unit():
        return DecoratedTree((mapping(1),), None) if mapping(1) == 1 else p
    children = [mapping(c) if isinstance(c, int) else relabel_decorated(c, mapping) for c in p.children]
    return decorate(children, p.config.points)


def act_permutation(p: DecoratedTree, sigma: Permutation) -> DecoratedTree:
    """Right action on stratum points: leaf ``sigma(i)`` becomes leaf ``i``."""
    return act_permutation_chart(ChartPoint(p, (0.0,) * p.edge_count, 1.0), sigma).point


def act_permutation_chart(cp: ChartPoint, sigma: Permutation) -> ChartPoint:
    if len(sigma) != cp.n:
        raise SizeMismatchError("permutation size does not match leaf count", n=cp.n, size=len(sigma))
    if cp.point.is_unit():
        return cp
    inv = sigma.inverse()
    node = _unpack(cp.point, cp.scales)

    def walk(v: _Node) -> None:
        v.children = [inv(c) if isinstance(c, int) else c for c in v.children]
        for c in v.children:
            if isinstance(c, _Node):
                walk(c)

    walk(node)
    tree, scales = _pack(node)
    return ChartPoint(tree, tuple(scales), cp.epsilon)


def conjugate_chart(cp: ChartPoint) -> ChartPoint:
    if cp.point.is_unit():
        return cp
    node = _unpack(cp.point, cp.scales)

    def walk(v: _Node) -> None:
        v.points = [z.conjugate() for z in v.points]
        for c in v.children:
            if isinstance(c, _Node):
                walk(c)

    walk(node)
    tree, scales = _pack(node)
    return ChartPoint(tree, tuple(scales), cp.epsilon)


def value_distance(a, b) -> float:
    """Distance between two chart values; ``inf`` when their strata differ."""
    if isinstance(a, PointConfiguration) and isinstance(b, PointConfiguration):
        return max_distance(a.points, b.points)
    if isinstance(a, DecoratedTree) and isinstance(b, DecoratedTree):
        if a.tree != b.tree:
            return math.inf
        return max(
            (max_distance(u.config.points, v.config.points) for u, v in zip(a.vertices(), b.vertices()) if u.config),
            default=0.0,
        )
    return math.inf


def act_on_value(value, sigma: Permutation):
    if isinstance(value, NormalizedConfiguration):
        return NormalizedConfiguration(sigma.apply(value.points))
    return act_permutation(value, sigma)


@dataclass(frozen=True)
class EquivarianceReport:
    cases: int
    max_error: float

    def to_json(self) -> dict:
        return {"cases": self.cases, "max_error": self.max_error}


def check_equivariance(samples: Iterable[ChartPoint], sigma: Permutation) -> EquivarianceReport:
    """Compare evaluate_chart(cp . sigma) with evaluate_chart(cp) . sigma over ``samples``."""
    worst, cases = 0.0, 0
    for cp in samples:
        left = evaluate_chart(act_permutation_chart(cp, sigma))
        right = act_on_value(evaluate_chart(cp), sigma)
        worst = max(worst, value_distance(left, right))
        cases += 1
    return EquivarianceReport(cases, worst)


@dataclass(frozen=True)
class ProbeReport:
    samples: int
    pairs: int
    min_separation: float
    min_ratio: float  # image distance / parameter distance
    worst_pair: tuple[int, int] | None

    def to_json(self) -> dict:
        return {
            "samples": self.samples,
            "pairs": self.pairs,
            "min_separation": self.min_separation,
            "min_ratio": self.min_ratio,
            "worst_pair": list(self.worst_pair) if self.worst_pair else None,
        }


def _perturb(p: DecoratedTree, radius: float, rng: random.Random) -> DecoratedTree:
    node = _unpack(p)

    def walk(v: _Node) -> None:
        moved = []
        for z in v.points:
            a = rng.uniform(0, 2 * math.pi)
            moved.append(z + radius * rng.random() * complex(math.cos(a), math.sin(a)))
        v.points = list(normalize(moved).points)
        for c in v.children:
            if isinstance(c, _Node):
                walk(c)

    walk(node)
    return _pack(node)[0]


def _parameters(cp: ChartPoint) -> list[float]:
    out: list[float] = []
    for v in cp.point.vertices():
        for z in v.config.points:
            out += [z.real, z.imag]
    return out + list(cp.scales)


def injectivity_probe(
    point: DecoratedTree,
    radius: float,
    scale_grid: Sequence[float],
    samples: int = 8,
    seed: int = 0,
    epsilon: float | None = None,
) -> ProbeReport:
    """Sample chart points near ``point`` and measure how well their images separate.

    Reports the smallest ratio of image distance to parameter distance over
    all pairs of samples with distinct parameters; a ratio bounded away from zero is the
    numerical shadow of the chart being injective.  Nothing is asserted.
    """
    rng = random.Random(seed)
    eps = default_epsilon(point) if epsilon is None else epsilon
    k = point.edge_count
    decorations = [point] + [_perturb(point, radius, rng) for _ in range(samples - 1)]
    charts = [
        ChartPoint(p, scales, eps) for p in decorations for scales in itertools.product(scale_grid, repeat=k)
    ]
    images = []
    for cp in charts:
        value = evaluate_chart(cp)
        images.append(value.points if isinstance(value, PointConfiguration) else None)
    params = [_parameters(cp) for cp in charts]
    best_ratio, best_sep, worst = math.inf, math.inf, None
    pairs = 0
    for a in range(len(charts)):
        for b in range(a + 1, len(charts)):
            if images[a] is None or images[b] is None:
                continue
            dp = math.dist(params[a], params[b])
            di = math.sqrt(math.fsum(abs(u - w) ** 2 for u, w in zip(images[a], images[b])))
            pairs += 1
            best_sep = min(best_sep, di)
            # coincident parameters have no ratio; they only show up as zero separation
            if dp > 0 and di / dp < best_ratio:
                best_ratio, worst = di / dp, (a, b)
    return ProbeReport(len(charts), pairs, best_sep, best_ratio, worst)


# Coloured stratum points ---------------------------------------------------

ColoredDecoratedSubtree = Union["ColoredDecoratedTree", ColoredLeaf]


@dataclass(frozen=True)
class ColoredDecoratedTree:
    """A coloured vertex; open vertices carry a conjugation-symmetric doubled decoration.

    For an open vertex with closed children ``S_1..S_a`` and open children
    ``O_1..O_b`` the decoration is ``(z_1, conj z_1, ..., z_a, conj z_a,
    x_1, ..., x_b)``.  Closed vertices carry one point per child.
    """

    color: str
    children: tuple[ColoredDecoratedSubtree, ...]
    config: NormalizedConfiguration | None

    def __post_init__(self):
        if self.config is None:
            if not self.tree.is_unit():
                raise TreeError("only units may be undecorated")
            return
        closed = sum(1 for c in self.children if c.color == "c")
        expected = len(self.children) + (closed if self.color == "o" else 0)
        if len(self.config) != expected:
            raise SizeMismatchError("decoration size does not match the vertex", expected=expected, size=len(self.config))
        if self.color == "o":
            defect = symmetry_defect(self.config.points, phi_pairing(closed, len(self.children) - closed))
            if defect > tolerance.geo():
                raise TreeError("open decoration is not conjugation symmetric", defect=defect)

    @cached_property
    def tree(self) -> ColoredTree:
        return ColoredTree(self.color, tuple(c if isinstance(c, ColoredLeaf) else c.tree for c in self.children))

    def vertices(self) -> list[ColoredDecoratedTree]:
        out: list[ColoredDecoratedTree] = []

        def walk(v) -> None:
            out.append(v)
            for c in v.children:
                if isinstance(c, ColoredDecoratedTree):
                    walk(c)

        walk(self)
        return out

    @property
    def edge_count(self) -> int:
        return len(self.vertices()) - 1

    @property
    def counts(self) -> tuple[int, int]:
        return self.tree.counts


def _slot_groups(color: str, children: Sequence, points: Sequence[complex]) -> list[tuple]:
    """Pair each child with its decoration slice (two points for closed children of open vertices)."""
    if color == "c":
        return [(c, (z,)) for c, z in zip(children, points)]
    groups, k = [], 0
    closed = [c for c in children if c.color == "c"]
    opened = [c for c in children if c.color == "o"]
    for c in closed:
        groups.append((c, (points[k], points[k + 1])))
        k += 2
    for c in opened:
        groups.append((c, (points[k],)))
        k += 1
    return groups


def decorate_colored(color: str, children: Sequence, points: Sequence[complex]) -> ColoredDecoratedTree:
    """Build a coloured vertex; ``points`` follow the order of ``children`` (closed children first)."""
    groups = _slot_groups(color, children, points)
    order = make_colored(color, [c if isinstance(c, ColoredLeaf) else c.tree for c, _ in groups]).children
    by_key = {}
    for c, zs in groups:
        by_key[c if isinstance(c, ColoredLeaf) else c.tree] = (c, zs)
    ordered = [by_key[t] for t in order]
    pts = tuple(z for _, zs in ordered for z in zs)
    return ColoredDecoratedTree(color, tuple(c for c, _ in ordered), NormalizedConfiguration(pts))


@dataclass(frozen=True)
class ColoredChartPoint:
    point: ColoredDecoratedTree
    scales: tuple[float, ...]
    epsilon: float

    def __post_init__(self):
        scales = tuple(float(t) for t in self.scales)
        object.__setattr__(self, "scales", scales)
        if self.point.config is not None:
            check_colored(self.point.tree)
        k = 0 if self.point.config is None else self.point.edge_count
        if len(scales) != k:
            raise SizeMismatchError("one scale per internal edge", edges=k, scales=len(scales))
        if any(not (math.isfinite(t) and t >= 0) for t in scales):
            raise ParameterError("scales must be finite and non-negative")
        if not self.epsilon > 0:
            raise ParameterError("collar width must be positive", epsilon=self.epsilon)


def double(ccp: ColoredChartPoint) -> ChartPoint:
    """The doubled chart point in F2(2p + q).

    Leaf labels follow the Swiss-cheese flattening: closed leaf ``k`` -> ``k``,
    its mirror -> ``p + k``, open leaf ``j`` -> ``2p + j``.  Mirrored edges
    share the scale of the original edge.
    """
    p, _ = ccp.point.counts
    root = ccp.point
    if root.config is None:
        raise TreeError("units have no doubled chart point")
    it = iter(ccp.scales)
    scales_of: dict[int, float] = {}

    def collect(v: ColoredDecoratedTree) -> None:
        for c in v.children:
            if isinstance(c, ColoredDecoratedTree):
                scales_of[id(c)] = next(it)
                collect(c)

    collect(root)

    def leaf(c: ColoredLeaf, mirror: bool) -> int:
        if c.color == "o":
            return 2 * p + c.label
        return c.label + (p if mirror else 0)

    def closed_subtree(v: ColoredDecoratedTree, scale: float | None, mirror: bool) -> _Node:
        children = [
            leaf(c, mirror) if isinstance(c, ColoredLeaf) else closed_subtree(c, scales_of[id(c)], mirror)
            for c in v.children
        ]
        pts = [z.conjugate() for z in v.config.points] if mirror else list(v.config.points)
        return _Node(children, pts, scale)

    def open_vertex(v: ColoredDecoratedTree, scale: float | None) -> _Node:
        children: list = []
        for c in v.children:
            if c.color == "c":
                for mirror in (False, True):
                    if isinstance(c, ColoredLeaf):
                        children.append(leaf(c, mirror))
                    else:
                        children.append(closed_subtree(c, scales_of[id(c)], mirror))
            elif isinstance(c, ColoredLeaf):
                children.append(leaf(c, False))
            elif c.color == "o":
                children.append(open_vertex(c, scales_of[id(c)]))
        return _Node(children, list(v.config.points), scale)

    node = closed_subtree(root, None, False) if root.color == "c" else open_vertex(root, None)
    tree, scales = _pack(node)
    return ChartPoint(tree, tuple(scales), ccp.epsilon)


def default_colored_epsilon(point: ColoredDecoratedTree) -> float:
    return default_epsilon(double(ColoredChartPoint(point, (0.0,) * point.edge_count, 1.0)).point)
