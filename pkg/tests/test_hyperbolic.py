"""Tests for Mobius maps, the pseudohyperbolic metric, complex geodesics and congruence."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from pickspace.core.errors import DimensionMismatchError, InvalidInputError, SizeMismatchError
from pickspace.core.generators import (
    extreme_opposite_points,
    random_automorphism,
    random_ball_points,
    random_generic_points,
    random_geodesic_points,
)
from pickspace.core.gram import are_rescalings
from pickspace.core.hyperbolic import (
    apply_automorphism,
    automorphism_to_origin,
    congruent_sets,
    disk_coordinates,
    find_congruence,
    in_single_geodesic,
    mobius,
    pseudohyperbolic,
    pseudohyperbolic_matrix,
    transform_set,
    triple_geodesic_margin,
    triples_in_geodesics,
)
from pickspace.core.pick import da_gram
from pickspace.models.models import BallAutomorphism, BallPoint, PointSet

DISTANCE_TOL = 1e-10
MARGIN_TOL = 1e-10
GENERIC_MARGIN = 1e-4


def test_mobius_is_an_involution(rng: np.random.Generator) -> None:
    """Test that phi_a exchanges a and 0 and is its own inverse."""
    a = random_ball_points(rng, 1, 3)[0]
    z = random_ball_points(rng, 5, 3)
    assert_allclose(mobius(a, a), 0, atol=1e-14)
    assert_allclose(mobius(a, np.zeros(3)), a, atol=1e-14)
    assert_allclose(mobius(a, mobius(a, z)), z, atol=1e-12)


def test_mobius_at_origin_is_minus_identity() -> None:
    """Test that phi_0(z) = -z."""
    z = np.array([0.1 + 0.2j, -0.3])
    assert_allclose(mobius(np.zeros(2), z), -z)


def test_automorphism_to_origin(rng: np.random.Generator) -> None:
    """Test that the returned automorphism sends its center to 0."""
    a = BallPoint.from_array(random_ball_points(rng, 1, 2)[0])
    phi = automorphism_to_origin(a)
    assert_allclose(apply_automorphism(phi, a.coords), 0, atol=1e-14)


def test_automorphism_to_origin_at_origin_is_identity() -> None:
    """Test that the automorphism centered at 0 is the identity."""
    phi = automorphism_to_origin(BallPoint.from_array(np.zeros(2)))
    z = np.array([[0.2, 0.1j], [-0.4, 0.3]])
    assert_allclose(apply_automorphism(phi, z), z)


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 6), m=st.integers(1, 3))
def test_automorphisms_preserve_distances_and_rescale_gram(seed: int, n: int, m: int) -> None:
    """Test that an automorphism keeps pseudohyperbolic distances and rescales the Gram."""
    rng = np.random.default_rng(seed)
    ps = PointSet.from_array(random_ball_points(rng, n, m))
    image = transform_set(random_automorphism(rng, m), ps)
    assert_allclose(pseudohyperbolic_matrix(image), pseudohyperbolic_matrix(ps), atol=DISTANCE_TOL)
    assert are_rescalings(da_gram(image), da_gram(ps)) is not None


def test_pseudohyperbolic_disk_value() -> None:
    """Test the distance of 0 and 1/2 in the disk."""
    z = BallPoint.from_array(np.array([0.0]))
    w = BallPoint.from_array(np.array([0.5]))
    assert pseudohyperbolic(z, w) == pytest.approx(0.5)


def test_pseudohyperbolic_dimension_mismatch() -> None:
    """Test that points of different balls cannot be compared."""
    with pytest.raises(DimensionMismatchError):
        pseudohyperbolic(BallPoint.from_array(np.zeros(1)), BallPoint.from_array(np.zeros(2)))


def test_transform_set_dimension_mismatch(rng: np.random.Generator, extreme_set: PointSet) -> None:
    """Test that an automorphism of another ball is rejected."""
    with pytest.raises(DimensionMismatchError):
        transform_set(random_automorphism(rng, 3), extreme_set)


def test_automorphism_requires_unitary() -> None:
    """Test the validation of the unitary part."""
    center = BallPoint.from_array(np.zeros(2))
    with pytest.raises(InvalidInputError):
        BallAutomorphism(center=center, unitary=2 * np.eye(2))
    with pytest.raises(InvalidInputError):
        BallAutomorphism(center=center, unitary=np.eye(3))


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 7), m=st.integers(1, 3))
def test_geodesic_points_lie_in_one_geodesic(seed: int, n: int, m: int) -> None:
    """Test that generated geodesic sets pass the geodesic test."""
    ps = random_geodesic_points(np.random.default_rng(seed), n, m)
    membership = in_single_geodesic(ps)
    assert membership.in_geodesic
    assert membership.direction is not None
    assert np.linalg.norm(membership.direction) == pytest.approx(1.0)


def test_extreme_set_not_in_geodesic(extreme_set: PointSet) -> None:
    """Test that the three point set is as far from a geodesic as it can be."""
    membership = in_single_geodesic(extreme_set)
    assert not membership.in_geodesic
    assert membership.direction is None
    assert membership.margin == pytest.approx(1.0)
    assert not triples_in_geodesics(extreme_set)


def test_two_points_always_in_geodesic(rng: np.random.Generator) -> None:
    """Test that any two points lie in one complex geodesic."""
    ps = PointSet.from_array(random_ball_points(rng, 2, 3))
    assert in_single_geodesic(ps).in_geodesic


def test_triples_need_three_points(two_point_disk: PointSet) -> None:
    """Test that the triple test rejects sets of two points."""
    with pytest.raises(InvalidInputError):
        triples_in_geodesics(two_point_disk)


def test_triples_of_geodesic_set(rng: np.random.Generator) -> None:
    """Test that every triple of a geodesic set lies in a geodesic."""
    ps = random_geodesic_points(rng, 5, 2)
    assert triples_in_geodesics(ps)
    assert triple_geodesic_margin(ps) < 1e-8


def test_disk_coordinates_keep_distances(rng: np.random.Generator) -> None:
    """Test that disk coordinates start at 0 and keep pseudohyperbolic distances."""
    ps = random_geodesic_points(rng, 5, 3)
    coords = disk_coordinates(ps)
    assert coords[0] == 0
    disk = PointSet.from_array(coords.reshape(-1, 1))
    assert_allclose(pseudohyperbolic_matrix(disk), pseudohyperbolic_matrix(ps), atol=1e-9)


def test_disk_coordinates_off_geodesic(extreme_set: PointSet) -> None:
    """Test that sets outside a geodesic have no disk coordinates."""
    with pytest.raises(InvalidInputError):
        disk_coordinates(extreme_set)


def test_congruence_finds_permuted_image(rng: np.random.Generator) -> None:
    """Test that a shuffled automorphic image is recognized with its matching."""
    ps = PointSet.from_array(random_ball_points(rng, 5, 2))
    shuffle = [3, 0, 4, 1, 2]
    image = transform_set(random_automorphism(rng, 2), ps).subset(shuffle)
    found = find_congruence(ps, image)
    assert found is not None
    permutation, _ = found
    assert [shuffle[j] for j in permutation] == list(range(5))
    assert congruent_sets(ps, image)


def test_non_congruent_sets() -> None:
    """Test that sets with different distances are not congruent."""
    assert not congruent_sets(extreme_opposite_points(0.5, 0.5), extreme_opposite_points(0.5, 0.6))


def test_congruence_size_mismatch(extreme_set: PointSet, two_point_disk: PointSet) -> None:
    """Test that sets of different sizes are rejected."""
    with pytest.raises(SizeMismatchError):
        find_congruence(extreme_set, two_point_disk)


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(3, 6), m=st.integers(2, 3))
def test_geodesic_test_is_invariant_under_automorphisms(seed: int, n: int, m: int) -> None:
    """Test that moving a set by an automorphism keeps the verdict and the margin."""
    rng = np.random.default_rng(seed)
    geodesic = random_geodesic_points(rng, n, m)
    generic = PointSet.from_array(random_ball_points(rng, n, m))
    for ps in (geodesic, generic):
        image = transform_set(random_automorphism(rng, m), ps)
        before, after = in_single_geodesic(ps), in_single_geodesic(image)
        assert after.in_geodesic == before.in_geodesic
        assert after.margin == pytest.approx(before.margin, abs=MARGIN_TOL)


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(3, 6), m=st.integers(2, 3))
def test_triples_agree_with_whole_set(seed: int, n: int, m: int) -> None:
    """Test that every triple lies in a geodesic exactly when the whole set does."""
    rng = np.random.default_rng(seed)
    generic = random_generic_points(rng, n, m, margin=GENERIC_MARGIN)
    assert not in_single_geodesic(generic).in_geodesic
    assert not triples_in_geodesics(generic)

    geodesic = random_geodesic_points(rng, n, m)
    assert in_single_geodesic(geodesic).in_geodesic
    assert triples_in_geodesics(geodesic)
