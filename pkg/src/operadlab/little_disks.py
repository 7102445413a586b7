"""The little disks operad D2.

A configuration is a tuple of disks (centre, radius) inside the unit disk
with disjoint interiors.  Containment and disjointness are closed
conditions: tangency is allowed, and the tolerance only ever relaxes
them.

Composition is an affine substitution ``(c, r) -> (c_i + r_i c, r_i r)``.
It is evaluated on the exact binary values of the operands (every double
is a dyadic rational) and rounded once, so the operad identities hold
bit-for-bit on the float view, not just up to rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import tolerance
from .config_space import NormalizedConfiguration, Permutation, as_point, normalize
from .errors import ArityError, BlendInvalidError, ParameterError, SizeMismatchError, SlotError, ValidityError

ExactDisk = tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class Disk:
    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center))
        r = float(self.radius)
        if not (math.isfinite(r) and r > 0):
            raise ParameterError("disk radius must be positive and finite", radius=r)
        object.__setattr__(self, "radius", r)

    def conjugate(self) -> Disk:
        return Disk(self.center.conjugate(), self.radius)


def _exact(disk: Disk) -> ExactDisk:
    return Fraction(disk.center.real), Fraction(disk.center.imag), Fraction(disk.radius)


def _rounded(e: ExactDisk) -> Disk:
    return Disk(complex(float(e[0]), float(e[1])), float(e[2]))


def glue(outer: ExactDisk, inner: Sequence[ExactDisk]) -> list[ExactDisk]:
    """Image of ``inner`` disks under the affine map sending D^2 onto ``outer``."""
    cx, cy, r = outer
    return [(cx + r * x, cy + r * y, r * s) for x, y, s in inner]


def conj_exact(e: ExactDisk) -> ExactDisk:
    return e[0], -e[1], e[2]


@dataclass(frozen=True)
class Violation:
    kind: str  # "containment" or "disjointness"
    indices: tuple[int, ...]
    excess: float  # how far the inequality is violated

    def to_json(self) -> dict:
        return {"kind": self.kind, "indices": list(self.indices), "excess": self.excess}


@dataclass(frozen=True)
class DiskConfiguration:
    """A point of D2(n), n >= 1.  Construction does not validate geometry; see `validate`."""

    disks: tuple[Disk, ...]
    _exact: tuple[ExactDisk, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        disks = tuple(d if isinstance(d, Disk) else Disk(*d) for d in self.disks)
        object.__setattr__(self, "disks", disks)
        if not disks:
            raise ArityError("D2(0) is empty")

    @classmethod
    def from_exact(cls, exact: Sequence[ExactDisk]) -> DiskConfiguration:
        exact = tuple(exact)
        return cls(tuple(_rounded(e) for e in exact), exact)

    def exact(self) -> tuple[ExactDisk, ...]:
        if self._exact is None:
            object.__setattr__(self, "_exact", tuple(_exact(d) for d in self.disks))
        return self._exact

    def __len__(self) -> int:
        return len(self.disks)

    def __getitem__(self, i):
        return self.disks[i]

    @property
    def centers(self) -> tuple[complex, ...]:
        return tuple(d.center for d in self.disks)

    @property
    def radii(self) -> tuple[float, ...]:
        return tuple(d.radius for d in self.disks)


def identity_config() -> DiskConfiguration:
    return DiskConfiguration((Disk(0j, 1.0),))


def validate(d: DiskConfiguration, tol: float | None = None) -> list[Violation]:
    """All violated containment / disjointness constraints; empty when valid."""
    tol = tolerance.geo(tol)
    out: list[Violation] = []
    for i, disk in enumerate(d.disks, start=1):
        excess = abs(disk.center) + disk.radius - 1.0
        if excess > tol:
            out.append(Violation("containment", (i,), excess))
    for i in range(len(d)):
        a = d.disks[i]
        for j in range(i + 1, len(d)):
            b = d.disks[j]
            excess = a.radius + b.radius - abs(a.center - b.center)
            if excess > tol:
                out.append(Violation("disjointness", (i + 1, j + 1), excess))
    return out


def is_valid(d: DiskConfiguration, tol: float | None = None) -> bool:
    return not validate(d, tol)


def require_valid(d: DiskConfiguration, tol: float | None = None) -> DiskConfiguration:
    violations = validate(d, tol)
    if violations:
        raise ValidityError("invalid disk configuration", violations=violations)
    return d


def compose(d: DiskConfiguration, i: int, other: DiskConfiguration) -> DiskConfiguration:
    """Glue ``other`` into disk ``i`` of ``d``; the inserted disks occupy slots i..i+m-1."""
    n = len(d)
    if not 1 <= i <= n:
        raise SlotError("composition slot out of range", slot=i, arity=n)
    ex = d.exact()
    inserted = glue(ex[i - 1], other.exact())
    exact = ex[: i - 1] + tuple(inserted) + ex[i:]
    disks = d.disks[: i - 1] + tuple(_rounded(e) for e in inserted) + d.disks[i:]
    return DiskConfiguration(disks, exact)


def act_permutation(d: DiskConfiguration, sigma: Permutation) -> DiskConfiguration:
    if len(sigma) != len(d):
        raise SizeMismatchError("permutation size does not match configuration", n=len(d), size=len(sigma))
    return DiskConfiguration(sigma.apply(d.disks), sigma.apply(d.exact()))


def conjugate(d: DiskConfiguration) -> DiskConfiguration:
    return DiskConfiguration(tuple(x.conjugate() for x in d.disks), tuple(conj_exact(e) for e in d.exact()))


def project_centers(d: DiskConfiguration) -> NormalizedConfiguration:
    """The projection to C(n): centres modulo translation and dilation."""
    if len(d) < 2:
        raise ArityError("projection to C(n) needs n >= 2", n=len(d))
    return normalize(d.centers)


def convex_blend(d1: DiskConfiguration, d2: DiskConfiguration, delta: float, tol: float | None = None) -> DiskConfiguration:
    """``delta * d1 + (1 - delta) * d2`` on centres and radii; raises if the blend is invalid."""
    if len(d1) != len(d2):
        raise SizeMismatchError("blend needs equal arity", left=len(d1), right=len(d2))
    if not 0.0 <= delta <= 1.0:
        raise ParameterError("blend weight must lie in [0, 1]", delta=delta)
    rest = 1.0 - delta
    disks = []
    for a, b in zip(d1.disks, d2.disks):
        centre = complex(delta * a.center.real + rest * b.center.real, delta * a.center.imag + rest * b.center.imag)
        disks.append(Disk(centre, delta * a.radius + rest * b.radius))
    out = DiskConfiguration(tuple(disks))
    violations = validate(out, tol)
    if violations:
        raise BlendInvalidError("convex blend left D2(n)", delta=delta, violations=violations)
    return out


def max_difference(a: DiskConfiguration, b: DiskConfiguration) -> float:
    """Largest centre or radius discrepancy between two configurations of equal arity."""
    if len(a) != len(b):
        raise SizeMismatchError("configurations differ in arity", left=len(a), right=len(b))
    return max(max(abs(x.center - y.center), abs(x.radius - y.radius)) for x, y in zip(a.disks, b.disks))
