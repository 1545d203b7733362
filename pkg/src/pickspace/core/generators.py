"""Reproducible random inputs: disk and ball points, automorphisms, rescalings and zero sets.

Every generator takes a ``numpy.random.Generator`` so that equal seeds give equal output.
"""

import numpy as np
from scipy.stats import unitary_group

from ..config.settings import get_settings
from ..models.arrays import ComplexArray
from ..models.models import (
    BallAutomorphism,
    BallPoint,
    BlaschkeData,
    GramMatrix,
    PointSet,
    RescalingWitness,
    Tolerances,
    resolve_tolerances,
)
from ..utils.logging import setup_logging
from .errors import InvalidInputError
from .gram import apply_rescaling
from .hyperbolic import in_single_geodesic, mobius, transform_set, triple_geodesic_margin
from .pick import da_gram

logger = setup_logging(__name__)

MAX_ATTEMPTS = 10_000
MAX_CENTER_RADIUS = 0.5
GENERIC_MARGIN_FACTOR = 10


def _ball_sample(rng: np.random.Generator, m: int, radius: float) -> ComplexArray:
    direction = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    direction /= np.linalg.norm(direction)
    return np.asarray(direction * radius * rng.random() ** (1 / (2 * m)), dtype=np.complex128)


def random_ball_points(
    rng: np.random.Generator,
    n: int,
    m: int,
    radius: float | None = None,
    min_separation: float | None = None,
) -> ComplexArray:
    """Sample n points of the ball of the given Euclidean radius in C^m.

    Points closer than min_separation in the pseudohyperbolic metric are rejected.

    Args:
        rng: Random generator
        n: Number of points
        m: Ambient dimension
        radius: Euclidean radius, default from settings
        min_separation: Minimum pairwise pseudohyperbolic distance, default from settings

    Returns:
        ComplexArray: n x m array of points

    Raises:
        InvalidInputError: If the points cannot be placed
    """
    settings = get_settings()
    radius = settings.max_radius if radius is None else radius
    min_separation = settings.min_separation if min_separation is None else min_separation
    if n < 1 or m < 1:
        msg = f"need n >= 1 and m >= 1, got n={n}, m={m}"
        raise InvalidInputError(msg, "random_ball_points")

    points: list[ComplexArray] = []
    for _ in range(MAX_ATTEMPTS):
        candidate = _ball_sample(rng, m, radius)
        if all(np.linalg.norm(mobius(p, candidate)) >= min_separation for p in points):
            points.append(candidate)
            if len(points) == n:
                return np.stack(points)
    msg = f"could not place {n} points with separation {min_separation}"
    raise InvalidInputError(msg, "random_ball_points")


def random_disk_points(
    rng: np.random.Generator,
    n: int,
    radius: float | None = None,
    min_separation: float | None = None,
) -> ComplexArray:
    """Sample n separated points of the unit disk."""
    return random_ball_points(rng, n, 1, radius, min_separation)[:, 0]


def random_automorphism(
    rng: np.random.Generator,
    m: int,
    max_center: float = MAX_CENTER_RADIUS,
) -> BallAutomorphism:
    """Sample an automorphism U phi_a with |a| <= max_center and Haar random U."""
    center = BallPoint(coords=_ball_sample(rng, m, max_center))
    if m > 1:
        unitary = unitary_group.rvs(m, random_state=rng)
    else:
        unitary = np.exp(2j * np.pi * rng.random()) * np.eye(1)
    return BallAutomorphism(center=center, unitary=unitary)


def random_geodesic_points(rng: np.random.Generator, n: int, m: int) -> PointSet:
    """Sample n points on a random complex geodesic of the ball in C^m.

    Separated disk points are embedded in the first coordinate and moved by a random
    automorphism.
    """
    disk = random_disk_points(rng, n)
    embedded = np.zeros((n, m), dtype=np.complex128)
    embedded[:, 0] = disk
    return transform_set(random_automorphism(rng, m), PointSet(coords=embedded))


def random_generic_points(
    rng: np.random.Generator,
    n: int,
    m: int,
    margin: float | None = None,
    tol: Tolerances | None = None,
) -> PointSet:
    """Sample n points of C^m that are at least ``margin`` away from any complex geodesic.

    Both the whole set and its worst triple {x_1, x_i, x_j} must have a second to first
    singular value ratio of at least margin.

    Args:
        rng: Random generator
        n: Number of points, at least 3
        m: Ambient dimension, at least 2
        margin: Minimum geodesic margin, default from settings
        tol: Tolerances

    Returns:
        PointSet: Point set in general position

    Raises:
        InvalidInputError: If n < 3, m < 2, the margin is not well above the rank-one
            tolerance, or no set is found
    """
    tol = resolve_tolerances(tol)
    margin = get_settings().generic_margin if margin is None else margin
    if n < 3 or m < 2:
        msg = f"generic sets need n >= 3 and m >= 2, got n={n}, m={m}"
        raise InvalidInputError(msg, "random_generic_points")
    if margin < GENERIC_MARGIN_FACTOR * tol.rankone_tol:
        msg = (
            f"margin {margin:g} must be at least {GENERIC_MARGIN_FACTOR} times the rank-one "
            f"tolerance {tol.rankone_tol:g}"
        )
        raise InvalidInputError(msg, "random_generic_points")

    for attempt in range(MAX_ATTEMPTS):
        ps = PointSet(coords=random_ball_points(rng, n, m))
        if (
            in_single_geodesic(ps, tol).margin >= margin
            and triple_geodesic_margin(ps, tol) >= margin
        ):
            logger.debug(f"random_generic_points: accepted after {attempt + 1} draws")
            return ps
    msg = f"no generic set with margin {margin} found"
    raise InvalidInputError(msg, "random_generic_points")


def random_rescaling(rng: np.random.Generator, n: int) -> RescalingWitness:
    """Sample factors with modulus in [0.5, 2] and uniform phase."""
    modulus = rng.uniform(0.5, 2.0, n)
    phase = np.exp(2j * np.pi * rng.random(n))
    return RescalingWitness(lambdas=modulus * phase)


def random_blaschke(rng: np.random.Generator, n: int) -> BlaschkeData:
    """Sample n separated simple zeros in the disk."""
    return BlaschkeData(zeros=random_disk_points(rng, n))


def random_pick_gram(rng: np.random.Generator, n: int, m: int = 2) -> GramMatrix:
    """Sample a randomly rescaled Drury-Arveson Gram of n points of C^m."""
    ps = PointSet(coords=random_ball_points(rng, n, m))
    return apply_rescaling(da_gram(ps), random_rescaling(rng, n))


def extreme_opposite_points(a: float = 0.5, b: float = 0.5) -> PointSet:
    """Return {(0, 0), (a, 0), (0, b)}, a set that is as far from a geodesic as possible."""
    return PointSet(coords=np.array([[0, 0], [a, 0], [0, b]], dtype=np.complex128))
