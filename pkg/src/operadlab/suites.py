"""Randomised property suites shared by the CLI ``check`` command and the tests.

Each suite returns a `Report`: number of cases, the worst error seen, and a
witness for every failing case.  Suites never raise on a failed property.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable

from . import little_disks as ld
from . import swiss_cheese as sc
from .config_space import NormalizedConfiguration, Permutation, insert_permutation, max_distance
from .errors import OperadLabError, ParameterError
from .fm_operad import (
    ChartPoint,
    act_permutation_chart,
    act_on_value,
    default_epsilon,
    evaluate_chart,
    evaluate_chart_staged,
    graft_decorated,
    value_distance,
)
from .homotopy_map import collar_profile, mu, nu, nu_boundary, nu_interior
from .little_disks import Disk, DiskConfiguration
from .sampling import (
    random_chart_point,
    random_collar_point,
    random_colored_chart_point,
    random_decorated_tree,
    random_disks,
    random_points,
    random_sc,
)
from .serialize import to_json
from .trees import enumerate_trees, stratum_dimension


@dataclass
class Report:
    suite: str
    tolerance: float
    cases: int = 0
    max_error: float = 0.0
    failures: list = field(default_factory=list)

    def record(self, error: float, witness: Callable[[], dict] | None = None, check: str = "") -> None:
        """Count one comparison; ``witness`` is only built for failures."""
        if math.isnan(error) or error > self.tolerance:
            item = {"check": check, "error": error}
            if witness is not None:
                item["witness"] = witness()
            self.failures.append(item)
        if not math.isnan(error):
            self.max_error = max(self.max_error, error)

    def fail(self, check: str, witness: dict) -> None:
        self.failures.append({"check": check, "witness": witness})

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases": self.cases, "failures": self.failures, "max_error": self.max_error}


def _rand_perm(n: int, rng: random.Random) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def _diff(a: DiskConfiguration, b: DiskConfiguration) -> float:
    return ld.max_difference(a, b) if len(a) == len(b) else math.inf


def d2_axioms(cases: int = 1000, seed: int = 0, max_n: int = 5, tol: float = 1e-9) -> Report:
    """Associativity, commutativity, unit, equivariance and validity of D2 composition."""
    rng = random.Random(seed)
    rep = Report("d2-axioms", tol)
    unit = ld.identity_config()
    for _ in range(cases):
        rep.cases += 1
        n1, n2, n3 = (rng.randint(1, max_n) for _ in range(3))
        a, b, c = random_disks(n1, rng), random_disks(n2, rng), random_disks(n3, rng)
        i, j = rng.randint(1, n1), rng.randint(1, n2)
        ab = ld.compose(a, i, b)
        outputs = [ab]
        left = ld.compose(ab, i + j - 1, c)
        right = ld.compose(a, i, ld.compose(b, j, c))
        outputs += [left, right]
        rep.record(_diff(left, right), lambda: {"a": to_json(a), "b": to_json(b), "c": to_json(c), "i": i, "j": j}, "associativity")
        if n1 >= 2:
            i, k = sorted(rng.sample(range(1, n1 + 1), 2))
            left = ld.compose(ld.compose(a, i, b), k + n2 - 1, c)
            right = ld.compose(ld.compose(a, k, c), i, b)
            outputs += [left, right]
            rep.record(_diff(left, right), lambda: {"a": to_json(a), "i": i, "k": k}, "commutativity")
        i = rng.randint(1, n1)
        rep.record(_diff(ld.compose(unit, 1, a), a), check="left unit")
        rep.record(_diff(ld.compose(a, i, unit), a), check="right unit")
        sigma, tau = _rand_perm(n1, rng), _rand_perm(n2, rng)
        left = ld.compose(ld.act_permutation(a, sigma), i, ld.act_permutation(b, tau))
        right = ld.act_permutation(ld.compose(a, sigma(i), b), insert_permutation(sigma, i, tau))
        rep.record(_diff(left, right), lambda: {"sigma": list(sigma.images), "tau": list(tau.images), "i": i}, "equivariance")
        for d in outputs:
            violations = ld.validate(d, tol)
            if violations:
                rep.fail("validity", {"config": to_json(d), "violations": [v.to_json() for v in violations]})
    return rep


def sc_axioms(cases: int = 300, seed: int = 0, max_n: int = 2, max_m: int = 2, tol: float = 1e-9) -> Report:
    """Coloured operad identities of SC together with the flattening identities against D2."""
    rng = random.Random(seed)
    rep = Report("sc-axioms", tol)
    for _ in range(cases):
        rep.cases += 1
        n, m = rng.randint(0, max_n), rng.randint(1, max_m)
        a = random_sc(n, m, rng)
        b = random_sc(rng.randint(0, max_n), rng.randint(1, max_m), rng)
        c = random_sc(rng.randint(0, max_n), rng.randint(1, max_m), rng)
        d = random_disks(rng.randint(1, 3), rng)
        e = random_disks(rng.randint(1, 3), rng)
        flat = lambda x: x.to_disks()  # noqa: E731
        i, j = rng.randint(1, m), rng.randint(1, b.m)
        # open sequential associativity
        left = sc.compose_open(sc.compose_open(a, i, b), i + j - 1, c)
        right = sc.compose_open(a, i, sc.compose_open(b, j, c))
        rep.record(_diff(flat(left), flat(right)), check="open associativity")
        # open units
        rep.record(_diff(flat(sc.compose_open(a, i, sc.open_unit())), flat(a)), check="open right unit")
        rep.record(_diff(flat(sc.compose_open(sc.open_unit(), 1, a)), flat(a)), check="open left unit")
        # open flattening identity
        perm = sc.compose_open_reindexing(a.n, a.m, i, b.n, b.m)
        oracle = ld.act_permutation(ld.compose(flat(a), 2 * a.n + i, flat(b)), perm)
        rep.record(_diff(flat(sc.compose_open(a, i, b)), oracle), check="open flattening")
        if a.n:
            k = rng.randint(1, a.n)
            closed = sc.compose_closed(a, k, d)
            oracle = ld.compose(ld.compose(flat(a), a.n + k, ld.conjugate(d)), k, d)
            rep.record(_diff(flat(closed), oracle), check="closed flattening")
            kk = rng.randint(1, len(d))
            left = sc.compose_closed(closed, k + kk - 1, e)
            right = sc.compose_closed(a, k, ld.compose(d, kk, e))
            rep.record(_diff(flat(left), flat(right)), check="closed associativity")
            rep.record(_diff(flat(sc.compose_closed(a, k, ld.identity_config())), flat(a)), check="closed unit")
            # mixed: closed insertion commutes with open insertion elsewhere
            left = sc.compose_closed(sc.compose_open(a, i, b), k, d)
            right = sc.compose_open(sc.compose_closed(a, k, d), i, b)
            rep.record(_diff(flat(left), flat(right)), check="mixed commutativity")
        if b.n:
            k = rng.randint(1, b.n)
            left = sc.compose_closed(sc.compose_open(a, i, b), a.n + k, d)
            right = sc.compose_open(a, i, sc.compose_closed(b, k, d))
            rep.record(_diff(flat(left), flat(right)), check="mixed associativity")
        sigma, tau = _rand_perm(a.n, rng), _rand_perm(a.m, rng)
        acted = sc.act(a, sigma, tau)
        whole = sigma.direct_sum(sigma).direct_sum(tau)
        rep.record(_diff(flat(acted), ld.act_permutation(flat(a), whole)), check="equivariance")
    return rep


def _double_factorial(k: int) -> int:
    return math.prod(range(k, 0, -2)) if k > 0 else 1


def strata(max_n: int = 6, seed: int = 0, tol: float = 0.0) -> Report:
    """Binary-tree counts, corolla dimensions and the dimension/codimension identity."""
    rep = Report("strata", tol)
    for n in range(2, max_n + 1):
        rep.cases += 1
        binary = len(enumerate_trees(n, n - 2))
        expected = _double_factorial(2 * n - 3)
        if binary != expected:
            rep.fail("binary count", {"n": n, "count": binary, "expected": expected})
        for k in range(0, n - 1):
            for t in enumerate_trees(n, k):
                if stratum_dimension(t) + k != 2 * n - 3:
                    rep.fail("dimension", {"tree": str(t), "k": k})
    return rep


def charts(cases: int = 500, seed: int = 0, max_n: int = 5, tol: float = 1e-9) -> Report:
    """Staged against one-pass evaluation, and relabelling equivariance."""
    rng = random.Random(seed)
    rep = Report("charts", tol)
    for _ in range(cases):
        rep.cases += 1
        n = rng.randint(2, max_n)
        cp = random_chart_point(n, rng, scale_range=(0.0, 1.0))
        one = evaluate_chart(cp)
        staged = evaluate_chart_staged(cp, rng)
        rep.record(value_distance(one, staged), lambda: {"chart": to_json(cp)}, "staged")
        sigma = _rand_perm(n, rng)
        err = value_distance(evaluate_chart(act_permutation_chart(cp, sigma)), act_on_value(one, sigma))
        rep.record(err, lambda: {"chart": to_json(cp), "sigma": list(sigma.images)}, "equivariance")
    return rep


def nu_morphism(cases: int = 500, seed: int = 0, max_n: int = 5) -> Report:
    """Bit-exact ``nu_boundary(graft(P, i, Q)) == compose(nu_boundary(P), i, nu_boundary(Q))``."""
    rng = random.Random(seed)
    rep = Report("nu-morphism", 0.0)
    for _ in range(cases):
        rep.cases += 1
        n1 = rng.randint(2, max_n - 1)
        n2 = rng.randint(2, max_n + 1 - n1)
        p, q = random_decorated_tree(n1, rng), random_decorated_tree(n2, rng)
        i = rng.randint(1, n1)
        left = nu_boundary(graft_decorated(p, i, q))
        right = ld.compose(nu_boundary(p), i, nu_boundary(q))
        if left.disks != right.disks:
            rep.fail("morphism", {"P": to_json(p), "Q": to_json(q), "i": i})
        rep.max_error = max(rep.max_error, _diff(left, right))
    return rep


def nu_collar(cases: int = 10000, seed: int = 0, max_n: int = 6, tol: float = 1e-9) -> Report:
    """Validity of ``nu`` on random collar samples; a counterexample is a witness, not a crash."""
    rng = random.Random(seed)
    rep = Report("nu-collar", tol)
    for _ in range(cases):
        rep.cases += 1
        cp = random_collar_point(rng.randint(3, max_n), rng)
        try:
            d = nu(cp)
        except OperadLabError as exc:
            rep.fail("nu raised", {"chart": to_json(cp), "error": exc.to_json()})
            continue
        violations = ld.validate(d, tol)
        if violations:
            rep.fail("validity", {"chart": to_json(cp), "violations": [v.to_json() for v in violations]})
    return rep


def continuity(cases: int = 50, seed: int = 0, max_n: int = 6, final: float = 1e-2) -> Report:
    """Distance to ``nu_boundary`` along ``t = epsilon * 2**-k``: non-increasing and small at k = 10."""
    rng = random.Random(seed)
    rep = Report("continuity", final)
    for _ in range(cases):
        rep.cases += 1
        n = rng.randint(3, max_n)
        p = random_decorated_tree(n, rng, codim=rng.randint(1, n - 2))
        eps = default_epsilon(p)
        prof = collar_profile(p, eps)
        if any(b > a for a, b in zip(prof, prof[1:])):
            rep.fail("monotone", {"tree": to_json(p), "profile": prof})
        rep.record(prof[-1], lambda: {"tree": to_json(p), "profile": prof}, "final distance")
    return rep


def section(cases: int = 1000, seed: int = 0, max_n: int = 6, tol: float = 1e-12) -> Report:
    """``project_centers(nu_interior(c)) == c``."""
    rng = random.Random(seed)
    rep = Report("section", tol)
    for _ in range(cases):
        rep.cases += 1
        c = random_points(rng.randint(2, max_n), rng)
        d = nu_interior(c)
        if not ld.is_valid(d):
            rep.fail("validity", {"config": to_json(c)})
        rep.record(max_distance(ld.project_centers(d).points, c.points), lambda: {"config": to_json(c)}, "section")
    return rep


def _fiber_mate(c: NormalizedConfiguration, rng: random.Random) -> DiskConfiguration:
    """A random valid disk configuration whose centres normalise to ``c``."""
    a = rng.uniform(0.05, 1.0)
    b = complex(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)) * (1 - a)
    centers = [complex(a * z.real + b.real, a * z.imag + b.imag) for z in c.points]
    room = []
    for i, z in enumerate(centers):
        r = 1.0 - abs(z)
        for j, w in enumerate(centers):
            if j != i:
                r = min(r, abs(z - w) / 2)
        room.append(rng.uniform(0.2, 1.0) * r)
    return DiskConfiguration(tuple(Disk(z, r) for z, r in zip(centers, room)))


def fiber_blends(cases: int = 1000, seed: int = 0, max_n: int = 6, grid: int = 21, tol: float = 1e-9) -> Report:
    """Blends of two configurations over the same point of C(n) stay valid for every weight."""
    rng = random.Random(seed)
    rep = Report("fiber-blends", tol)
    for _ in range(cases):
        rep.cases += 1
        c = random_points(rng.randint(2, max_n), rng)
        d1, d2 = _fiber_mate(c, rng), _fiber_mate(c, rng)
        if not (ld.is_valid(d1, tol) and ld.is_valid(d2, tol)):
            rep.fail("sample", {"config": to_json(c)})
            continue
        for g in range(grid):
            delta = g / (grid - 1)
            try:
                ld.convex_blend(d1, d2, delta, tol)
            except OperadLabError as exc:
                rep.fail("blend", {"d1": to_json(d1), "d2": to_json(d2), "delta": delta, "error": exc.to_json()})
    return rep


MU_SIZES = ((0, 2), (1, 0), (1, 1), (0, 3), (2, 0), (2, 1), (1, 2), (2, 2), (0, 4))


def mu_symmetry(cases: int = 1000, seed: int = 0, tol: float = 1e-12) -> Report:
    """``mu`` of symmetric samples is conjugation symmetric (and lands in SC)."""
    rng = random.Random(seed)
    rep = Report("mu-symmetry", tol)
    for _ in range(cases):
        rep.cases += 1
        p, q = rng.choice(MU_SIZES)
        ccp = random_colored_chart_point(p, q, rng)
        if rng.random() < 0.3:
            ccp = type(ccp)(ccp.point, (0.0,) * len(ccp.scales), ccp.epsilon)
        try:
            out = mu(ccp)
        except OperadLabError as exc:
            rep.fail("mu raised", {"chart": to_json(ccp), "error": exc.to_json()})
            continue
        rep.record(sc.conjugation_defect(out.to_disks(), p, q), lambda: {"chart": to_json(ccp)}, "symmetry")
    return rep


SUITES: dict[str, Callable[..., Report]] = {
    "d2-axioms": d2_axioms,
    "sc-axioms": sc_axioms,
    "strata": strata,
    "charts": charts,
    "nu-morphism": nu_morphism,
    "nu-collar": nu_collar,
    "continuity": continuity,
    "section": section,
    "fiber-blends": fiber_blends,
    "mu-symmetry": mu_symmetry,
}


def run_suite(name: str, cases: int | None = None, seed: int = 0) -> Report:
    if name not in SUITES:
        raise ParameterError("unknown suite", suite=name, choices=sorted(SUITES))
    fn = SUITES[name]
    if name == "strata":
        return fn(seed=seed)
    return fn(seed=seed) if cases is None else fn(cases=cases, seed=seed)
