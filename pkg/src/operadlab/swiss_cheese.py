"""The unital Swiss-cheese operad SC with colours ``o`` (open) and ``c`` (closed).

Only the closed disks in the upper half-plane and the open disks (centred on
the real axis) are stored; mirrors are implicit.  Flattened label order is
closed 1..n, mirrors n+1..2n (mirror of i at i+n), open 2n+1..2n+m.

Closed-colour outputs SC(n, 0; c) are plain `DiskConfiguration` values.
Open composition places the closed disks of the inserted configuration
after those of the receiving one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import little_disks as ld
from . import tolerance
from .config_space import Permutation, block_pairing, symmetry_defect
from .errors import ArityError, SizeMismatchError, SlotError, SymmetryError, ValidityError
from .little_disks import Disk, DiskConfiguration, ExactDisk


@dataclass(frozen=True)
class ColoredLabel:
    color: str  # "o" or "c"
    index: int


@dataclass(frozen=True)
class SCConfiguration:
    closed_upper: tuple[Disk, ...]
    open: tuple[Disk, ...]
    _exact: tuple[ExactDisk, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        closed = tuple(d if isinstance(d, Disk) else Disk(*d) for d in self.closed_upper)
        opened = tuple(d if isinstance(d, Disk) else Disk(*d) for d in self.open)
        object.__setattr__(self, "closed_upper", closed)
        object.__setattr__(self, "open", opened)
        if not closed and not opened:
            raise ArityError("SC(0, 0; o) is empty")
        if any(d.center.imag <= 0 for d in closed):
            raise ValidityError("closed disks must be centred in the open upper half-plane")
        tol = tolerance.geo()
        if any(abs(d.center.imag) > tol for d in opened):
            raise ValidityError("open disks must be centred on the real axis")
        violations = ld.validate(self.to_disks())
        if violations:
            raise ValidityError("flattened configuration is not in D2", violations=violations)

    @property
    def n(self) -> int:
        return len(self.closed_upper)

    @property
    def m(self) -> int:
        return len(self.open)

    def exact(self) -> tuple[ExactDisk, ...]:
        """Exact values of the stored disks, closed then open."""
        if self._exact is None:
            object.__setattr__(self, "_exact", tuple(ld._exact(d) for d in self.closed_upper + self.open))
        return self._exact

    def to_disks(self) -> DiskConfiguration:
        ex = self.exact()
        upper, opened = ex[: self.n], ex[self.n :]
        exact = upper + tuple(ld.conj_exact(e) for e in upper) + opened
        disks = self.closed_upper + tuple(d.conjugate() for d in self.closed_upper) + self.open
        return DiskConfiguration(disks, exact)

    def label(self, slot: int) -> ColoredLabel:
        """Coloured label of a flattened slot (1-based)."""
        if slot <= 2 * self.n:
            return ColoredLabel("c", slot)
        return ColoredLabel("o", slot - 2 * self.n)


def _from_exact(upper: Sequence[ExactDisk], opened: Sequence[ExactDisk]) -> SCConfiguration:
    exact = tuple(upper) + tuple(opened)
    return SCConfiguration(
        tuple(ld._rounded(e) for e in upper), tuple(ld._rounded(e) for e in opened), exact
    )


def to_disks(sc: SCConfiguration) -> DiskConfiguration:
    return sc.to_disks()


def from_disks(d: DiskConfiguration, n: int, m: int, tol: float | None = None) -> SCConfiguration:
    """Read a flattened, conjugation-symmetric configuration back as SC(n, m; o)."""
    if len(d) != 2 * n + m:
        raise SizeMismatchError("flattened arity must be 2n + m", arity=len(d), n=n, m=m)
    defect = symmetry_defect(d.centers, block_pairing(n, m))
    radius_defect = max((abs(d.disks[k].radius - d.disks[k + n].radius) for k in range(n)), default=0.0)
    if max(defect, radius_defect) > tolerance.geo(tol):
        raise SymmetryError("configuration is not conjugation symmetric", defect=max(defect, radius_defect))
    ex = d.exact()
    return SCConfiguration(d.disks[:n], d.disks[2 * n :], ex[:n] + ex[2 * n :])


def compose_closed(
    sc: SCConfiguration | DiskConfiguration, i: int, d: DiskConfiguration
) -> SCConfiguration | DiskConfiguration:
    """Glue ``d`` into closed disk ``i`` and its conjugate into the mirror of ``i``."""
    if isinstance(sc, DiskConfiguration):
        return ld.compose(sc, i, d)
    if not 1 <= i <= sc.n:
        raise SlotError("closed slot out of range", slot=i, n=sc.n)
    ex = sc.exact()
    upper, opened = ex[: sc.n], ex[sc.n :]
    inserted = ld.glue(upper[i - 1], d.exact())
    return _from_exact(upper[: i - 1] + tuple(inserted) + upper[i:], opened)


def compose_open(sc: SCConfiguration, i: int, other: SCConfiguration) -> SCConfiguration:
    """Glue ``other`` (all of it, mirrors included) into open disk ``i``."""
    if not 1 <= i <= sc.m:
        raise SlotError("open slot out of range", slot=i, m=sc.m)
    ex, ox = sc.exact(), other.exact()
    upper, opened = ex[: sc.n], ex[sc.n :]
    outer = opened[i - 1]
    new_upper = upper + tuple(ld.glue(outer, ox[: other.n]))
    new_open = opened[: i - 1] + tuple(ld.glue(outer, ox[other.n :])) + opened[i:]
    return _from_exact(new_upper, new_open)


def compose_open_reindexing(n: int, m: int, i: int, n2: int, m2: int) -> Permutation:
    """Relabelling taking the plain D2 gluing into open slot ``2n + i`` to SC flattened order.

    ``to_disks(compose_open(a, i, b)) == act_permutation(compose(to_disks(a), 2n + i, to_disks(b)), P)``.
    """
    # positions in the plain D2 result (1-based)
    a_upper = list(range(1, n + 1))
    a_mirror = list(range(n + 1, 2 * n + 1))
    a_open_before = list(range(2 * n + 1, 2 * n + i))
    base = 2 * n + i - 1
    b_upper = [base + k for k in range(1, n2 + 1)]
    b_mirror = [base + n2 + k for k in range(1, n2 + 1)]
    b_open = [base + 2 * n2 + k for k in range(1, m2 + 1)]
    tail = base + 2 * n2 + m2
    a_open_after = [tail + k for k in range(1, m - i + 1)]
    order = a_upper + b_upper + a_mirror + b_mirror + a_open_before + b_open + a_open_after
    return Permutation(tuple(order))


def phi_to_block_reindexing(p: int, q: int) -> Permutation:
    """Relabelling from the doubling order ``(z1, conj z1, ..., x1, ...)`` to flattened SC order.

    ``P.apply(phi_ordered)`` lists closed points, then mirrors, then open points.
    """
    images = [2 * k - 1 for k in range(1, p + 1)] + [2 * k for k in range(1, p + 1)]
    images += [2 * p + j for j in range(1, q + 1)]
    return Permutation(tuple(images))


def act(sc: SCConfiguration, sigma: Permutation, tau: Permutation) -> SCConfiguration:
    """Right action of S_n x S_m: sigma moves closed pairs, tau moves open disks."""
    if len(sigma) != sc.n or len(tau) != sc.m:
        raise SizeMismatchError("action sizes do not match", n=sc.n, m=sc.m, sigma=len(sigma), tau=len(tau))
    ex = sc.exact()
    return _from_exact(sigma.apply(ex[: sc.n]), tau.apply(ex[sc.n :]))


def open_unit() -> SCConfiguration:
    return SCConfiguration((), (Disk(0j, 1.0),))


def conjugation_defect(d: DiskConfiguration, n: int, m: int) -> float:
    """Deviation of a flattened configuration from mirror symmetry (centres and radii)."""
    defect = symmetry_defect(d.centers, block_pairing(n, m))
    return max([defect] + [abs(d.disks[k].radius - d.disks[k + n].radius) for k in range(n)])
