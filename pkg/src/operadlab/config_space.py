"""Configurations of marked points in the plane and the affine quotient C(n).

Points are Python ``complex`` numbers.  A configuration modulo
``z -> a z + b`` (a > 0) is represented by its normal form: zero sum and
unit second moment.  Configurations on the closed upper half-plane are only
ever handled through their doubled image in C(2p + q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import tolerance
from .errors import (
    ArityError,
    DegeneracyError,
    NormalFormError,
    PairingError,
    ParameterError,
    SizeMismatchError,
)

PlanePoint = complex


def as_point(value) -> complex:
    """Coerce ``complex``, real numbers or ``(re, im)`` pairs to a finite point."""
    if isinstance(value, complex):
        z = value
    elif isinstance(value, (int, float)):
        z = complex(value, 0.0)
    else:
        re, im = value
        z = complex(float(re), float(im))
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ParameterError("point coordinates must be finite", point=z)
    return z


def _distance(a: complex, b: complex) -> float:
    # abs() of a complex raises OverflowError near the float limit; hypot returns inf
    return math.hypot(a.real - b.real, a.imag - b.imag)


def min_pairwise_distance(points: Sequence[complex]) -> float:
    best = math.inf
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            d = _distance(points[i], points[j])
            if d < best:
                best = d
    return best


def _closest_pair(points: Sequence[complex]) -> tuple[int, int]:
    best, pair = math.inf, (0, 0)
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            d = _distance(points[i], points[j])
            if d < best:
                best, pair = d, (i + 1, j + 1)
    return pair


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``1..n`` given by its images; acts on the right.

    ``cfg . sigma`` puts the point formerly labelled ``sigma(i)`` at label
    ``i``, so ``(cfg . s) . t == cfg . (s * t)`` with ``(s * t)(i) = s(t(i))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(k) for k in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ParameterError("not a permutation of 1..n", images=list(images))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if len(self) != len(other):
            raise SizeMismatchError("permutation sizes differ", left=len(self), right=len(other))
        return Permutation(tuple(self(other(i)) for i in range(1, len(other) + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, k in enumerate(self.images, start=1):
            inv[k - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, len(self) + 1))

    def apply(self, seq: Sequence) -> tuple:
        """Right action on a sequence: position ``i`` receives ``seq[sigma(i)]``."""
        if len(seq) != len(self):
            raise SizeMismatchError("sequence length does not match permutation", n=len(seq), size=len(self))
        return tuple(seq[k - 1] for k in self.images)

    def direct_sum(self, other: Permutation) -> Permutation:
        n = len(self)
        return Permutation(self.images + tuple(n + k for k in other.images))


def insert_permutation(sigma: Permutation, i: int, tau: Permutation) -> Permutation:
    """Operadic composite ``sigma o_i tau`` in S_{n+m-1}.

    Satisfies ``(x . sigma) o_i (y . tau) = (x o_{sigma(i)} y) . (sigma o_i tau)``
    for any operad whose insertion splices the inserted block at the slot.
    """
    n, m = len(sigma), len(tau)
    if not 1 <= i <= n:
        raise ParameterError("slot out of range", slot=i, arity=n)
    target = sigma(i)

    def shift(k: int) -> int:
        return k if k < target else k + m - 1

    images = [shift(sigma(k)) for k in range(1, i)]
    images += [target + tau(j) - 1 for j in range(1, m + 1)]
    images += [shift(sigma(k)) for k in range(i + 1, n + 1)]
    return Permutation(tuple(images))


@dataclass(frozen=True)
class PointConfiguration:
    """An ordered sequence of pairwise distinct plane points (a point of Conf(n))."""

    points: tuple[complex, ...]

    def __post_init__(self):
        pts = tuple(as_point(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ArityError("a configuration needs at least one point")
        if len(pts) > 1 and min_pairwise_distance(pts) == 0.0:
            raise DegeneracyError("points must be pairwise distinct", pair=list(_closest_pair(pts)))

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __iter__(self):
        return iter(self.points)


def _normal_form_defects(points: Sequence[complex]) -> tuple[float, float]:
    total = complex(math.fsum(z.real for z in points), math.fsum(z.imag for z in points))
    moment = math.fsum(z.real * z.real + z.imag * z.imag for z in points)
    return abs(total), abs(moment - 1.0)


def is_normalized(points: Sequence[complex], tol: float | None = None) -> bool:
    tol = tolerance.norm(tol)
    centre, moment = _normal_form_defects(points)
    return centre <= tol and moment <= tol


@dataclass(frozen=True)
class NormalizedConfiguration(PointConfiguration):
    """Normal-form representative of a point of C(n), n >= 2."""

    def __post_init__(self):
        super().__post_init__()
        if len(self.points) < 2:
            raise ArityError("normal form needs n >= 2", n=len(self.points))
        centre, moment = _normal_form_defects(self.points)
        tol = tolerance.norm()
        if centre > tol or moment > tol:
            raise NormalFormError("points are not in normal form", centroid_defect=centre, moment_defect=moment)
        if max(abs(z) for z in self.points) >= 1.0:
            raise NormalFormError("normal form must lie strictly inside the unit disk")


@dataclass(frozen=True)
class HalfPlaneConfiguration:
    """``p`` interior points (im > 0) and ``q`` boundary points (im = 0); a point of Conf(p, q)."""

    interior: tuple[complex, ...]
    boundary: tuple[complex, ...]

    def __post_init__(self):
        interior = tuple(as_point(z) for z in self.interior)
        boundary = tuple(as_point(x) for x in self.boundary)
        object.__setattr__(self, "interior", interior)
        object.__setattr__(self, "boundary", boundary)
        if 2 * len(interior) + len(boundary) < 2:
            raise ArityError("need 2p + q >= 2", p=len(interior), q=len(boundary))
        if any(z.imag <= 0 for z in interior):
            raise ParameterError("interior points need im > 0")
        tol = tolerance.geo()
        if any(abs(x.imag) > tol for x in boundary):
            raise ParameterError("boundary points must lie on the real axis")
        for group in (interior, boundary):
            if len(group) > 1 and min_pairwise_distance(group) == 0.0:
                raise DegeneracyError("points must be pairwise distinct", pair=list(_closest_pair(group)))

    @property
    def p(self) -> int:
        return len(self.interior)

    @property
    def q(self) -> int:
        return len(self.boundary)


def normalize(cfg: PointConfiguration | Sequence, tol: float | None = None) -> NormalizedConfiguration:
    """Translate to zero sum and scale to unit second moment.

    Input that already satisfies both constraints within ``tol_norm`` is
    returned as is, which makes the operation exactly idempotent.
    """
    if isinstance(cfg, NormalizedConfiguration):
        return cfg
    if not isinstance(cfg, PointConfiguration):
        cfg = PointConfiguration(tuple(cfg))
    pts = cfg.points
    n = len(pts)
    if n < 2:
        raise ArityError("normalize needs n >= 2", n=n)
    if is_normalized(pts, tol):
        return NormalizedConfiguration(pts)
    cx = math.fsum(z.real for z in pts) / n
    cy = math.fsum(z.imag for z in pts) / n
    shifted = [(z.real - cx, z.imag - cy) for z in pts]
    s = math.sqrt(math.fsum(x * x + y * y for x, y in shifted))
    if s == 0.0:
        raise DegeneracyError("all points coincide")
    return NormalizedConfiguration(tuple(complex(x / s, y / s) for x, y in shifted))


def act_affine(cfg: PointConfiguration, a: float, b: complex = 0j) -> PointConfiguration:
    if not a > 0:
        raise ParameterError("dilation factor must be positive", a=a)
    b = as_point(b)
    return PointConfiguration(tuple(complex(a * z.real + b.real, a * z.imag + b.imag) for z in cfg.points))


def act_permutation(cfg: PointConfiguration, sigma: Permutation) -> PointConfiguration:
    if len(sigma) != len(cfg):
        raise SizeMismatchError("permutation size does not match configuration", n=len(cfg), size=len(sigma))
    points = sigma.apply(cfg.points)
    if isinstance(cfg, NormalizedConfiguration):
        return NormalizedConfiguration(points)
    return PointConfiguration(points)


def doubling_embedding(h: HalfPlaneConfiguration) -> PointConfiguration:
    """``(z1, conj z1, ..., zp, conj zp, x1, ..., xq)``."""
    pts: list[complex] = []
    for z in h.interior:
        pts += [z, z.conjugate()]
    pts += list(h.boundary)
    return PointConfiguration(tuple(pts))


def doubled_normal_form(h: HalfPlaneConfiguration) -> NormalizedConfiguration:
    """Normal form of the doubled configuration, exactly conjugation symmetric.

    The centroid and scale of a doubled configuration are real, so the
    normal form is again a doubled configuration; computing it from the
    half-plane data keeps mirror pairs bit-identical.
    """
    n = 2 * h.p + h.q
    cx = math.fsum([2 * z.real for z in h.interior] + [x.real for x in h.boundary]) / n
    s = math.sqrt(
        math.fsum([2 * ((z.real - cx) ** 2 + z.imag**2) for z in h.interior] + [(x.real - cx) ** 2 for x in h.boundary])
    )
    pts: list[complex] = []
    for z in h.interior:
        w = complex((z.real - cx) / s, z.imag / s)
        pts += [w, w.conjugate()]
    pts += [complex((x.real - cx) / s, 0.0) for x in h.boundary]
    return NormalizedConfiguration(tuple(pts))


def phi_pairing(p: int, q: int) -> tuple[int, ...]:
    """Mirror pairing of the doubling order: 2k-1 <-> 2k, boundary slots fixed."""
    pairing: list[int] = []
    for k in range(p):
        pairing += [2 * k + 2, 2 * k + 1]
    pairing += list(range(2 * p + 1, 2 * p + q + 1))
    return tuple(pairing)


def block_pairing(n: int, m: int) -> tuple[int, ...]:
    """Mirror pairing of the Swiss-cheese flattening: i <-> i + n, last m slots fixed."""
    return tuple([k + n for k in range(1, n + 1)] + list(range(1, n + 1)) + list(range(2 * n + 1, 2 * n + m + 1)))


def conjugate(cfg: PointConfiguration) -> PointConfiguration:
    points = tuple(z.conjugate() for z in cfg.points)
    if isinstance(cfg, NormalizedConfiguration):
        return NormalizedConfiguration(points)
    return PointConfiguration(points)


def _check_pairing(pairing: Sequence[int], n: int) -> None:
    if len(pairing) != n:
        raise PairingError("pairing length does not match configuration", n=n, length=len(pairing))
    for i, j in enumerate(pairing, start=1):
        if not 1 <= j <= n or pairing[j - 1] != i:
            raise PairingError("pairing must be an involution of 1..n", index=i, partner=j)


def symmetry_defect(points: Sequence[complex], pairing: Sequence[int] | None = None) -> float:
    """Largest deviation from ``z[pair(i)] == conj(z[i])``."""
    n = len(points)
    pairing = tuple(range(1, n + 1)) if pairing is None else tuple(pairing)
    _check_pairing(pairing, n)
    worst = 0.0
    for i, j in enumerate(pairing, start=1):
        z = points[i - 1]
        defect = abs(z.imag) if i == j else abs(points[j - 1] - z.conjugate())
        worst = max(worst, defect)
    return worst


def is_conjugation_symmetric(
    cfg: PointConfiguration | Sequence[complex], pairing: Sequence[int] | None = None, tol: float | None = None
) -> bool:
    points = cfg.points if isinstance(cfg, PointConfiguration) else tuple(cfg)
    return symmetry_defect(points, pairing) <= tolerance.geo(tol)


def max_distance(a: Iterable[complex], b: Iterable[complex]) -> float:
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise SizeMismatchError("configurations differ in size", left=len(a), right=len(b))
    return max((abs(x - y) for x, y in zip(a, b)), default=0.0)
