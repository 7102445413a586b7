import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from operadlab import little_disks as ld
from operadlab.config_space import Permutation, insert_permutation, max_distance, normalize
from operadlab.errors import ArityError, BlendInvalidError, ParameterError, SizeMismatchError, SlotError, ValidityError
from operadlab.little_disks import Disk, DiskConfiguration
from operadlab.sampling import random_disks

from conftest import rng_from, seeds


def cfg(*pairs):
    return DiskConfiguration(tuple(Disk(c, r) for c, r in pairs))


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(lambda p: Permutation(tuple(p)))


def test_identity():
    assert ld.identity_config() == cfg((0j, 1.0))
    assert ld.is_valid(ld.identity_config())


def test_empty_and_bad_disks_rejected():
    with pytest.raises(ArityError):
        DiskConfiguration(())
    with pytest.raises(ParameterError):
        Disk(0j, 0.0)
    with pytest.raises(ParameterError):
        Disk(0j, math.nan)


def test_validate_reports_each_violation():
    d = cfg((-0.5, 1.0), (0.5, 1.0))
    kinds = sorted((v.kind, v.indices) for v in ld.validate(d))
    assert kinds == [("containment", (1,)), ("containment", (2,)), ("disjointness", (1, 2))]
    overlap = next(v for v in ld.validate(d) if v.kind == "disjointness")
    assert overlap.excess == pytest.approx(1.0)
    with pytest.raises(ValidityError):
        ld.require_valid(d)


def test_tangent_disks_are_valid():
    assert ld.is_valid(cfg((-0.5, 0.5), (0.5, 0.5)))


def test_compose_example():
    d = cfg((0.5, 0.25), (-0.5, 0.25))
    out = ld.compose(d, 1, d)
    assert out == cfg((0.625, 0.0625), (0.375, 0.0625), (-0.5, 0.25))


def test_compose_slot_errors():
    with pytest.raises(SlotError):
        ld.compose(ld.identity_config(), 2, ld.identity_config())


def test_compose_uses_exact_arithmetic():
    # one rounding step: the float result is the nearest double to the exact affine image
    a = cfg((0.1 + 0.2j, 0.3))
    b = cfg((0.7 - 0.1j, 0.2), (-0.6, 0.3))
    out = ld.compose(a, 1, b)
    c, r = Fraction(0.1), Fraction(0.3)
    for disk, (x, _) in zip(out.disks, [(0.7, 0.2), (-0.6, 0.3)]):
        assert disk.center.real == float(c + r * Fraction(x))


@given(seeds, st.integers(1, 5))
def test_units(seed, n):
    d = random_disks(n, rng_from(seed))
    unit = ld.identity_config()
    assert ld.compose(unit, 1, d) == d
    for i in range(1, n + 1):
        assert ld.compose(d, i, unit) == d


@given(seeds, st.data())
def test_sequential_associativity(seed, data):
    rng = rng_from(seed)
    a, b, c = (random_disks(data.draw(st.integers(1, 5)), rng) for _ in range(3))
    i, j = data.draw(st.integers(1, len(a))), data.draw(st.integers(1, len(b)))
    left = ld.compose(ld.compose(a, i, b), i + j - 1, c)
    right = ld.compose(a, i, ld.compose(b, j, c))
    assert ld.max_difference(left, right) <= 1e-9
    assert ld.is_valid(left) and ld.is_valid(right)


@given(seeds, st.data())
def test_parallel_commutativity(seed, data):
    rng = rng_from(seed)
    a = random_disks(data.draw(st.integers(2, 5)), rng)
    b, c = random_disks(data.draw(st.integers(1, 4)), rng), random_disks(data.draw(st.integers(1, 4)), rng)
    i, k = sorted(data.draw(st.lists(st.integers(1, len(a)), min_size=2, max_size=2, unique=True)))
    left = ld.compose(ld.compose(a, i, b), k + len(b) - 1, c)
    right = ld.compose(ld.compose(a, k, c), i, b)
    assert ld.max_difference(left, right) <= 1e-9


@given(seeds, st.data())
def test_equivariance(seed, data):
    rng = rng_from(seed)
    a, b = random_disks(data.draw(st.integers(1, 5)), rng), random_disks(data.draw(st.integers(1, 4)), rng)
    sigma, tau = data.draw(perms(len(a))), data.draw(perms(len(b)))
    i = data.draw(st.integers(1, len(a)))
    left = ld.compose(ld.act_permutation(a, sigma), i, ld.act_permutation(b, tau))
    right = ld.act_permutation(ld.compose(a, sigma(i), b), insert_permutation(sigma, i, tau))
    assert ld.max_difference(left, right) <= 1e-9


def test_permutation_examples():
    d = cfg((0.5, 0.25), (-0.5, 0.25))
    assert ld.act_permutation(d, Permutation.identity(2)) == d
    assert ld.act_permutation(d, Permutation((2, 1))) == cfg((-0.5, 0.25), (0.5, 0.25))
    with pytest.raises(SizeMismatchError):
        ld.act_permutation(d, Permutation.identity(3))


@given(seeds, st.integers(2, 5), st.floats(0.1, 1.0), st.complex_numbers(max_magnitude=0.5, allow_nan=False))
def test_projection_is_affine_invariant(seed, n, a, b):
    d = random_disks(n, rng_from(seed))
    moved = DiskConfiguration(tuple(Disk(a * x.center + b, a * x.radius) for x in d.disks))
    assert max_distance(ld.project_centers(d).points, ld.project_centers(moved).points) <= 1e-12


def test_projection_of_normal_centres_is_unchanged():
    c = normalize([0, 1, 2j])
    d = DiskConfiguration(tuple(Disk(z, 0.01) for z in c.points))
    assert ld.project_centers(d) == c
    with pytest.raises(ArityError):
        ld.project_centers(ld.identity_config())


def test_blend_examples():
    d1 = cfg((0.5, 0.25), (-0.5, 0.25))
    d2 = cfg((0.5, 0.1), (-0.5, 0.2))
    assert ld.convex_blend(d1, d2, 1.0) == d1
    assert ld.convex_blend(d1, d2, 0.0) == d2
    mid = ld.convex_blend(d1, d2, 0.5)
    assert mid.radii == pytest.approx((0.175, 0.225), abs=1e-15)
    assert mid.centers == d1.centers


def test_blend_errors():
    d1 = cfg((0.5, 0.5), (-0.5, 0.5))
    d2 = cfg((0.0, 0.5), (0.9, 0.1))
    with pytest.raises(BlendInvalidError) as info:
        ld.convex_blend(d1, d2, 0.5)
    assert info.value.details["violations"]
    with pytest.raises(SizeMismatchError):
        ld.convex_blend(d1, ld.identity_config(), 0.5)
    with pytest.raises(ParameterError):
        ld.convex_blend(d1, d1, 1.5)


@given(seeds, st.integers(2, 5), st.floats(0.05, 1.0), st.floats(-0.2, 0.2))
def test_blend_with_affine_image_stays_valid(seed, n, a, shift):
    d1 = random_disks(n, rng_from(seed))
    b = complex(shift, shift) * (1 - a)
    d2 = DiskConfiguration(tuple(Disk(a * x.center + b, a * x.radius) for x in d1.disks))
    if not ld.is_valid(d2):
        return
    for k in range(21):
        assert ld.is_valid(ld.convex_blend(d1, d2, k / 20))


def test_conjugate():
    d = cfg((0.1 + 0.5j, 0.2))
    assert ld.conjugate(d) == cfg((0.1 - 0.5j, 0.2))
    assert ld.conjugate(ld.conjugate(d)) == d
