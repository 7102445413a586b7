"""The maps from the compactified configuration spaces to little disks.

``nu_interior`` puts a disk of common radius around every point of a
normal-form configuration.  ``nu_boundary`` extends it to stratum points by
operad composition.  ``nu`` blends the two across a collar of width
``epsilon`` using a bump function of the chart scales, and ``mu`` is the
restriction to open/closed coloured points through doubling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import little_disks as ld
from . import swiss_cheese as sc
from . import tolerance
from .config_space import NormalizedConfiguration, Permutation, min_pairwise_distance
from .errors import ParameterError, SymmetryError
from .fm_operad import ChartPoint, ColoredChartPoint, DecoratedTree, double, evaluate_chart
from .little_disks import Disk, DiskConfiguration

BUMPS = ("linear", "smooth")


@dataclass(frozen=True)
class CollarParams:
    """Collar width and bump shape.  ``epsilon=None`` uses the chart point's own width."""

    epsilon: float | None = None
    bump: str = "linear"

    def __post_init__(self):
        if self.bump not in BUMPS:
            raise ParameterError("unknown bump function", bump=self.bump, choices=list(BUMPS))
        if self.epsilon is not None and not (math.isfinite(self.epsilon) and self.epsilon > 0):
            raise ParameterError("collar width must be positive", epsilon=self.epsilon)


def interior_radius(c: NormalizedConfiguration) -> float:
    """``min(min_{i<j} |x_i - x_j| / 2, min_i (1 - |x_i|))``."""
    pts = c.points
    return min(min_pairwise_distance(pts) / 2, min(1.0 - abs(z) for z in pts))


def nu_interior(c: NormalizedConfiguration) -> DiskConfiguration:
    if len(c) == 1:
        return ld.identity_config()
    r = interior_radius(c)
    return DiskConfiguration(tuple(Disk(z, r) for z in c.points))


def _nu_dfs(v: DecoratedTree) -> DiskConfiguration:
    d = nu_interior(v.config)
    # right to left, so earlier slots keep their index
    for slot in range(len(v.children), 0, -1):
        child = v.children[slot - 1]
        if isinstance(child, DecoratedTree):
            d = ld.compose(d, slot, _nu_dfs(child))
    return d


def nu_boundary(p: DecoratedTree) -> DiskConfiguration:
    """Operad-morphism extension of ``nu_interior`` to stratum points (leaf-label order)."""
    if p.is_unit():
        return ld.identity_config()
    d = _nu_dfs(p)
    order = p.leaf_order()
    position = {label: k for k, label in enumerate(order, start=1)}
    return ld.act_permutation(d, Permutation(tuple(position[label] for label in range(1, len(order) + 1))))


def _epsilon(cp: ChartPoint, params: CollarParams) -> float:
    return cp.epsilon if params.epsilon is None else params.epsilon


def bump(cp: ChartPoint, params: CollarParams = CollarParams()) -> float:
    """1 on the boundary, 0 once some scale reaches the collar width."""
    if not cp.scales:
        return 0.0
    s = max(cp.scales) / _epsilon(cp, params)
    u = min(1.0, max(0.0, 1.0 - s))
    if params.bump == "smooth":
        return 0.5 - 0.5 * math.cos(math.pi * u)
    return u


def nu(cp: ChartPoint, params: CollarParams = CollarParams()) -> DiskConfiguration:
    """``u * nu_boundary(p) + (1 - u) * nu_interior(M(p, t))`` on a chart point.

    Points with all scales zero go to ``nu_boundary``; mixed scale vectors
    (some zero, some positive) are outside the supported domain.
    """
    if cp.point.is_unit():
        return ld.identity_config()
    if not cp.scales:
        return nu_interior(cp.point.config)
    zero = [t == 0 for t in cp.scales]
    if all(zero):
        return nu_boundary(cp.point)
    if any(zero):
        raise ParameterError("mixed zero and positive scales are not supported", scales=list(cp.scales))
    u = bump(cp, params)
    inner = nu_interior(evaluate_chart(cp))
    if u == 0.0:
        return inner
    return ld.convex_blend(nu_boundary(cp.point), inner, u)


def mu(ccp: ColoredChartPoint, params: CollarParams = CollarParams()) -> sc.SCConfiguration | DiskConfiguration:
    """``nu`` on the doubled chart point, read back as a Swiss-cheese configuration."""
    p, q = ccp.point.counts
    d = nu(double(ccp), params)
    if ccp.point.color == "c":
        return d
    defect = sc.conjugation_defect(d, p, q)
    if defect > tolerance.geo():
        raise SymmetryError("doubled image lost conjugation symmetry", defect=defect)
    return sc.from_disks(d, p, q)


def collar_profile(p: DecoratedTree, epsilon: float, ks=range(1, 11), params: CollarParams = CollarParams()) -> list[float]:
    """Distances from ``nu`` at scales ``epsilon * 2**-k`` (all edges) to ``nu_boundary(p)``."""
    target = nu_boundary(p)
    out = []
    for k in ks:
        cp = ChartPoint(p, (epsilon * 2.0**-k,) * p.edge_count, epsilon)
        out.append(ld.max_difference(nu(cp, params), target))
    return out
