"""Complex hyperbolic geometry of the unit ball: Mobius maps, the pseudohyperbolic metric,
complex geodesics and congruence of finite sets.
"""

from itertools import combinations

import numpy as np
from numpy.typing import NDArray

from ..models.arrays import ComplexArray
from ..models.models import (
    BallAutomorphism,
    BallPoint,
    GramMatrix,
    PointSet,
    RescalingWitness,
    Tolerances,
    resolve_tolerances,
)
from ..models.reports import GeodesicMembership
from ..utils.logging import setup_logging
from .errors import BoundaryPointError, DimensionMismatchError, InvalidInputError, SizeMismatchError
from .gram import are_rescalings, delta_matrix
from .pick import da_gram

logger = setup_logging(__name__)


def mobius(a: ComplexArray, z: ComplexArray) -> ComplexArray:
    """Apply phi_a(z) = (a - P_a z - s_a Q_a z) / (1 - <z, a>) to points in the last axis.

    phi_a is an involution of the ball exchanging a and 0; phi_0(z) = -z.
    """
    z = np.asarray(z, dtype=np.complex128)
    aa = float(np.vdot(a, a).real)
    if aa == 0:
        return -z

    za = z @ a.conj()
    pz = za[..., None] * a / aa
    qz = z - pz
    s = np.sqrt(1.0 - aa)
    return (a - pz - s * qz) / (1.0 - za)[..., None]


def apply_automorphism(phi: BallAutomorphism, z: ComplexArray) -> ComplexArray:
    """Apply U phi_a to a point or to the rows of a point array."""
    return mobius(phi.center.coords, z) @ phi.unitary.T


def transform_set(phi: BallAutomorphism, ps: PointSet) -> PointSet:
    """Return the image of a point set under a ball automorphism."""
    if phi.m != ps.m:
        msg = f"automorphism of B^{phi.m} applied to points of B^{ps.m}"
        raise DimensionMismatchError(msg, "transform_set")
    return PointSet.from_array(apply_automorphism(phi, ps.coords))


def automorphism_to_origin(a: BallPoint, tol: Tolerances | None = None) -> BallAutomorphism:
    """Return the automorphism sending a to the origin.

    For a != 0 this is the involution phi_a. For a = 0 the unitary is -I so that the
    composite is the identity.

    Args:
        a: Point strictly inside the ball
        tol: Tolerances

    Returns:
        BallAutomorphism: Automorphism with a sent to 0

    Raises:
        BoundaryPointError: If a is too close to the unit sphere
    """
    tol = resolve_tolerances(tol)
    norm = float(np.linalg.norm(a.coords))
    if norm >= 1 - tol.boundary_tol:
        msg = f"center norm {norm:.15g} is not strictly inside the unit ball"
        raise BoundaryPointError(msg, "automorphism_to_origin")

    identity = np.eye(a.m, dtype=np.complex128)
    unitary = -identity if norm == 0 else identity
    return BallAutomorphism(center=a, unitary=unitary)


def pseudohyperbolic(z: BallPoint, w: BallPoint) -> float:
    """Return the pseudohyperbolic distance |phi_z(w)|.

    Args:
        z: First point
        w: Second point

    Returns:
        float: Distance in [0, 1)

    Raises:
        DimensionMismatchError: If the points live in different balls
    """
    if z.m != w.m:
        msg = f"points of B^{z.m} and B^{w.m} cannot be compared"
        raise DimensionMismatchError(msg, "pseudohyperbolic")
    return float(min(1.0, np.linalg.norm(mobius(z.coords, w.coords))))


def pseudohyperbolic_matrix(ps: PointSet) -> NDArray[np.float64]:
    """Return all pairwise pseudohyperbolic distances of a point set."""
    out = np.zeros((ps.n, ps.n))
    for i in range(ps.n):
        out[i] = np.minimum(1.0, np.linalg.norm(mobius(ps.coords[i], ps.coords), axis=-1))
    out = (out + out.T) / 2
    np.fill_diagonal(out, 0.0)
    return out


def _unit_direction(v: ComplexArray) -> ComplexArray:
    v = v / np.linalg.norm(v)
    k = int(np.argmax(np.abs(v)))
    return np.asarray(v * np.conj(v[k]) / abs(v[k]), dtype=np.complex128)


def in_single_geodesic(ps: PointSet, tol: Tolerances | None = None) -> GeodesicMembership:
    """Decide whether a point set lies in a single complex geodesic.

    The first point is moved to the origin; the set lies in a geodesic iff the images
    of the others span at most a complex line, judged by the ratio of the second to
    the first singular value of the image matrix.

    Args:
        ps: Point set
        tol: Tolerances

    Returns:
        GeodesicMembership: Verdict, direction of the line and the singular value ratio
    """
    tol = resolve_tolerances(tol)
    if ps.n == 1:
        direction = np.zeros(ps.m, dtype=np.complex128)
        direction[0] = 1.0
        return GeodesicMembership(in_geodesic=True, direction=direction, margin=0.0)

    images = mobius(ps.coords[0], ps.coords[1:])
    _, s, vh = np.linalg.svd(images, full_matrices=False)
    margin = float(s[1] / max(s[0], 1e-30)) if s.size > 1 else 0.0
    in_geodesic = ps.n <= 2 or margin <= tol.rankone_tol
    logger.debug(f"in_single_geodesic: n={ps.n}, margin {margin:.3e}")
    return GeodesicMembership(
        in_geodesic=in_geodesic,
        direction=_unit_direction(vh[0]) if in_geodesic else None,
        margin=margin,
    )


def _triple_margins(ps: PointSet, tol: Tolerances) -> list[float]:
    if ps.n < 3:
        msg = f"triples need at least 3 points, got {ps.n}"
        raise InvalidInputError(msg, "triples_in_geodesics")
    return [
        in_single_geodesic(ps.subset([0, i, j]), tol).margin
        for i, j in combinations(range(1, ps.n), 2)
    ]


def triples_in_geodesics(ps: PointSet, tol: Tolerances | None = None) -> bool:
    """Return True if every triple {x_1, x_i, x_j} lies in a single complex geodesic."""
    tol = resolve_tolerances(tol)
    return all(margin <= tol.rankone_tol for margin in _triple_margins(ps, tol))


def triple_geodesic_margin(ps: PointSet, tol: Tolerances | None = None) -> float:
    """Return the largest singular value ratio over the triples {x_1, x_i, x_j}."""
    return max(_triple_margins(ps, resolve_tolerances(tol)))


def disk_coordinates(ps: PointSet, tol: Tolerances | None = None) -> ComplexArray:
    """Return disk coordinates of a set lying in one complex geodesic.

    The first point is moved to the origin and the images are read along the direction
    of the geodesic, so the first coordinate is 0 and pseudohyperbolic distances are kept.

    Args:
        ps: Point set in a single complex geodesic
        tol: Tolerances

    Returns:
        ComplexArray: n disk points

    Raises:
        InvalidInputError: If the set does not lie in a single geodesic
    """
    membership = in_single_geodesic(ps, tol)
    if not membership.in_geodesic or membership.direction is None:
        msg = f"points do not lie in one complex geodesic (margin {membership.margin:.3e})"
        raise InvalidInputError(msg, "disk_coordinates")

    images = mobius(ps.coords[0], ps.coords)
    coords = images @ membership.direction.conj()
    coords[0] = 0.0
    return coords


def find_congruence(
    x: PointSet,
    y: PointSet,
    tol: Tolerances | None = None,
) -> tuple[list[int], RescalingWitness] | None:
    """Search for a re-indexing of y under which the Drury-Arveson Grams are rescalings.

    Candidates are matched index by index and pruned by pseudohyperbolic distances; each
    complete matching is settled by the rescaling test.

    Args:
        x: First point set
        y: Second point set
        tol: Tolerances

    Returns:
        tuple[list[int], RescalingWitness] | None: perm with x_i matched to y_perm[i], and
        the rescaling witness, or None if the sets are not congruent

    Raises:
        SizeMismatchError: If the sets have different sizes
    """
    tol = resolve_tolerances(tol)
    if x.n != y.n:
        msg = f"point sets have {x.n} and {y.n} points"
        raise SizeMismatchError(msg, "congruent_sets")

    gx, gy = da_gram(x, tol), da_gram(y, tol)
    dx, dy = delta_matrix(gx), delta_matrix(gy)
    slack = max(10 * tol.match_tol, 1e-12)
    if not np.allclose(np.sort(dx, axis=None), np.sort(dy, axis=None), rtol=0, atol=slack):
        logger.debug("congruent_sets: distance multisets differ")
        return None

    rows_x, rows_y = np.sort(dx, axis=1), np.sort(dy, axis=1)
    candidates = [
        [j for j in range(y.n) if np.allclose(rows_x[i], rows_y[j], rtol=0, atol=slack)]
        for i in range(x.n)
    ]

    def extend(perm: list[int]) -> tuple[list[int], RescalingWitness] | None:
        i = len(perm)
        if i == x.n:
            permuted = GramMatrix.model_construct(entries=gy.entries[np.ix_(perm, perm)])
            witness = are_rescalings(gx, permuted, tol)
            return (list(perm), witness) if witness is not None else None
        for j in candidates[i]:
            if j in perm:
                continue
            if all(abs(dx[i, k] - dy[j, perm[k]]) <= slack for k in range(i)):
                found = extend([*perm, j])
                if found is not None:
                    return found
        return None

    return extend([])


def congruent_sets(x: PointSet, y: PointSet, tol: Tolerances | None = None) -> bool:
    """Return True if some ball automorphism maps x onto y."""
    found = find_congruence(x, y, tol)
    logger.debug(f"congruent_sets: {'congruent' if found else 'not congruent'}")
    return found is not None
