import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from operadlab import little_disks as ld
from operadlab import swiss_cheese as sc
from operadlab.config_space import (
    HalfPlaneConfiguration,
    NormalizedConfiguration,
    Permutation,
    doubled_normal_form,
    max_distance,
    normalize,
)
from operadlab.errors import ParameterError
from operadlab.fm_operad import (
    ChartPoint,
    ColoredChartPoint,
    act_permutation_chart,
    conjugate_chart,
    decorate_colored,
    decorated_corolla,
    default_epsilon,
    double,
    evaluate_chart,
    gamma_insert,
    graft_decorated,
    unit,
)
from operadlab.homotopy_map import (
    CollarParams,
    bump,
    collar_profile,
    interior_radius,
    mu,
    nu,
    nu_boundary,
    nu_interior,
)
from operadlab.little_disks import Disk, DiskConfiguration
from operadlab.sampling import random_collar_point, random_colored_chart_point, random_decorated_tree, random_points
from operadlab.trees import ColoredLeaf

from conftest import rng_from, seeds

R2 = 1 / math.sqrt(2)
PAIR = NormalizedConfiguration((-R2 + 0j, R2 + 0j))


def one_edge():
    return graft_decorated(decorated_corolla(PAIR), 1, decorated_corolla(PAIR))


def test_nu_interior_pair():
    d = nu_interior(PAIR)
    assert d.radii == (1 - R2, 1 - R2)
    assert d.radii[0] == pytest.approx(0.292893, abs=1e-6)
    assert ld.is_valid(d)


def test_nu_interior_triangle():
    c = normalize([0, 2, complex(1, math.sqrt(3))])
    d = nu_interior(c)
    assert d.radii[0] == pytest.approx(1 - 1 / math.sqrt(3), abs=1e-12)
    assert ld.is_valid(d)


def test_unhalved_radius_would_overlap():
    # three close points near the centre: the unhalved pairwise term lets disks overlap
    c = normalize([0.0, 0.01, 0.005j, 10.0])
    r_full = min(min(abs(a - b) for a in c.points for b in c.points if a != b), min(1 - abs(z) for z in c.points))
    overlapping = DiskConfiguration(tuple(Disk(z, r_full) for z in c.points))
    assert not ld.is_valid(overlapping)
    assert ld.is_valid(nu_interior(c))
    assert interior_radius(c) == pytest.approx(r_full / 2)


@given(seeds, st.integers(2, 7))
def test_section_property(seed, n):
    c = random_points(n, rng_from(seed))
    d = nu_interior(c)
    assert ld.is_valid(d)
    assert max_distance(ld.project_centers(d).points, c.points) <= 1e-12


def test_nu_boundary_example():
    d = nu_boundary(one_edge())
    r = 1 - R2
    expected = [(-R2 - r * R2, r * r), (-R2 + r * R2, r * r), (R2, r)]
    for disk, (c, rad) in zip(d.disks, expected):
        assert abs(disk.center - c) <= 1e-15 and abs(disk.radius - rad) <= 1e-15
    assert [round(x.center.real, 5) for x in d.disks] == [-0.91421, -0.5, 0.70711]
    assert [round(x.radius, 6) for x in d.disks] == [0.085786, 0.085786, 0.292893]


def test_nu_boundary_corolla_and_unit():
    c = random_points(4, rng_from(2))
    assert nu_boundary(decorated_corolla(c)) == nu_interior(c)
    assert nu_boundary(unit()) == ld.identity_config()
    assert nu_interior(NormalizedConfiguration((-R2 + 0j, R2 + 0j))) == nu_interior(PAIR)


@given(seeds, st.data())
def test_morphism_bit_exact(seed, data):
    rng = rng_from(seed)
    p = random_decorated_tree(data.draw(st.integers(2, 4)), rng)
    q = random_decorated_tree(data.draw(st.integers(2, 3)), rng)
    i = data.draw(st.integers(1, p.n))
    assert nu_boundary(graft_decorated(p, i, q)).disks == ld.compose(nu_boundary(p), i, nu_boundary(q)).disks


def test_bump_examples():
    cp = ChartPoint(one_edge(), (0.0,), 0.1)
    assert bump(cp) == 1.0
    assert bump(cp.with_scales((0.1,))) == 0.0
    assert bump(cp.with_scales((0.2,))) == 0.0
    assert bump(cp.with_scales((0.025,))) == 0.75
    assert bump(cp.with_scales((0.05,)), CollarParams(bump="smooth")) == pytest.approx(0.5)
    assert bump(cp.with_scales((0.05,)), CollarParams(epsilon=0.2)) == 0.75


def test_collar_params_validation():
    with pytest.raises(ParameterError):
        CollarParams(bump="cubic")
    with pytest.raises(ParameterError):
        CollarParams(epsilon=0.0)


def test_nu_cases():
    p = one_edge()
    eps = default_epsilon(p)
    assert nu(ChartPoint(p, (0.0,), eps)) == nu_boundary(p)
    outside = ChartPoint(p, (eps,), eps)
    assert nu(outside) == nu_interior(evaluate_chart(outside))
    c = random_points(3, rng_from(0))
    assert nu(ChartPoint(decorated_corolla(c), (), 0.1)) == nu_interior(c)


def test_nu_half_collar_example():
    p = one_edge()
    eps = default_epsilon(p)
    out = nu(ChartPoint(p, (eps / 2,), eps))
    inner = normalize(gamma_insert(PAIR, PAIR, 1, eps / 2))
    pts = inner.points
    r = min(min(abs(a - b) for a in pts for b in pts if a != b) / 2, min(1 - abs(z) for z in pts))
    boundary = nu_boundary(p)
    for k, disk in enumerate(out.disks):
        assert abs(disk.center - (0.5 * boundary.disks[k].center + 0.5 * pts[k])) <= 1e-15
        assert abs(disk.radius - (0.5 * boundary.disks[k].radius + 0.5 * r)) <= 1e-15
    assert ld.is_valid(out)


def test_mixed_scales_rejected():
    rng = random.Random(1)
    p = random_decorated_tree(5, rng, codim=2)
    with pytest.raises(ParameterError):
        nu(ChartPoint(p, (0.0, 0.01), 0.1))


@given(seeds, st.integers(3, 6))
def test_nu_valid_on_collar(seed, n):
    cp = random_collar_point(n, rng_from(seed))
    assert ld.is_valid(nu(cp))


@given(seeds, st.integers(3, 5))
def test_collar_continuity(seed, n):
    p = random_decorated_tree(n, rng_from(seed), codim=1)
    profile = collar_profile(p, default_epsilon(p))
    assert all(b <= a for a, b in zip(profile, profile[1:]))
    assert profile[-1] < 1e-2


@given(seeds, st.integers(3, 5), st.data())
def test_nu_equivariance(seed, n, data):
    cp = random_collar_point(n, rng_from(seed))
    sigma = Permutation(tuple(data.draw(st.permutations(list(range(1, n + 1))))))
    left = nu(act_permutation_chart(cp, sigma))
    right = ld.act_permutation(nu(cp), sigma)
    assert ld.max_difference(left, right) <= 1e-12


@given(seeds, st.integers(3, 5))
def test_nu_conjugation_equivariance(seed, n):
    cp = random_collar_point(n, rng_from(seed))
    assert ld.max_difference(nu(conjugate_chart(cp)), ld.conjugate(nu(cp))) <= 1e-12


def C(k):
    return ColoredLeaf("c", k)


def O(k):
    return ColoredLeaf("o", k)


def test_mu_open_pair():
    dec = doubled_normal_form(HalfPlaneConfiguration((), (0.0, 1.0)))
    out = mu(ColoredChartPoint(decorate_colored("o", [O(1), O(2)], dec.points), (), 0.1))
    assert isinstance(out, sc.SCConfiguration)
    assert out.n == 0 and out.m == 2
    assert all(d.center.imag == 0.0 for d in out.open)


def test_mu_single_closed_pair():
    dec = doubled_normal_form(HalfPlaneConfiguration((0.4j,), ()))
    out = mu(ColoredChartPoint(decorate_colored("o", [C(1)], dec.points), (), 0.1))
    assert out.n == 1 and out.m == 0
    (disk,) = out.closed_upper
    assert abs(disk.center - R2 * 1j) <= 1e-15
    assert disk.radius == pytest.approx(1 - R2, abs=1e-15)


def test_mu_closed_root_gives_plain_disks():
    ccp = random_colored_chart_point(3, 0, rng_from(4), color="c")
    out = mu(ccp)
    assert isinstance(out, DiskConfiguration) and len(out) == 3


@given(seeds, st.sampled_from([(1, 1), (2, 1), (1, 2), (0, 3), (2, 0), (2, 2)]))
def test_mu_symmetric(seed, pq):
    p, q = pq
    out = mu(random_colored_chart_point(p, q, rng_from(seed)))
    assert sc.conjugation_defect(out.to_disks(), p, q) <= 1e-12


@given(seeds, st.sampled_from([(1, 1), (2, 1), (1, 2)]))
def test_mu_equals_nu_of_the_double(seed, pq):
    ccp = random_colored_chart_point(*pq, rng_from(seed))
    assert mu(ccp).to_disks() == nu(double(ccp))
