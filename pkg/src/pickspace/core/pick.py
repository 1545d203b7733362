"""Drury-Arveson and model space Gram matrices, Blaschke products and the complete Pick test."""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..models.arrays import ComplexArray
from ..models.models import (
    BlaschkeData,
    GramMatrix,
    PointSet,
    RescalingWitness,
    Tolerances,
    resolve_tolerances,
)
from ..models.reports import ConjugationOperator, PickRealization
from ..utils.logging import setup_logging
from .errors import (
    DegenerateGramError,
    DuplicatePointsError,
    IndexBoundsError,
    NotCompletePickError,
    SingularGramError,
    VerificationError,
)
from .gram import check_index, dual_gram, is_degenerate

logger = setup_logging(__name__)


def da_gram(ps: PointSet, tol: Tolerances | None = None) -> GramMatrix:
    """Return the Drury-Arveson Gram matrix of a point set.

    Entry (i, j) is 1 / (1 - <x_j, x_i>).

    Args:
        ps: Points of the unit ball
        tol: Tolerances

    Returns:
        GramMatrix: Drury-Arveson Gram matrix

    Raises:
        DuplicatePointsError: If the points are numerically indistinguishable
    """
    x = ps.coords
    inner = x.conj() @ x.T
    try:
        return GramMatrix.from_array(1.0 / (1.0 - inner), tol)
    except SingularGramError as e:
        msg = f"points too close to separate: {e.message}"
        raise DuplicatePointsError(msg, "da_gram", e.details) from e


def model_gram(b: BlaschkeData, tol: Tolerances | None = None) -> GramMatrix:
    """Return the Gram matrix of the model space K_B, the Drury-Arveson Gram of its zeros."""
    points = PointSet.model_construct(coords=b.zeros.reshape(-1, 1))
    return da_gram(points, tol)


def blaschke_factor(x: complex, z: ArrayLike) -> ComplexArray:
    """Evaluate the disk automorphism factor vanishing at x.

    The factor is z when x = 0 and (|x|/x)(x - z)/(1 - conj(x) z) otherwise.
    """
    z = np.asarray(z, dtype=np.complex128)
    if x == 0:
        return z
    return (abs(x) / x) * (x - z) / (1 - np.conj(x) * z)


def blaschke_eval(b: BlaschkeData, z: ArrayLike) -> ComplexArray:
    """Evaluate the Blaschke product with the given zeros.

    Args:
        b: Zeros of the product
        z: Point or array of points in the closed disk

    Returns:
        ComplexArray: B(z), same shape as z
    """
    out = np.ones_like(np.asarray(z, dtype=np.complex128))
    for x in b.zeros:
        out = out * blaschke_factor(complex(x), z)
    return out


def blaschke_derivative_at_zero_i(b: BlaschkeData, i: int) -> complex:
    """Return B'(x_i), differentiating only the factor that vanishes at x_i.

    Args:
        b: Zeros of the product
        i: 0-based index of the zero

    Returns:
        complex: Derivative of the product at x_i, never zero for simple zeros
    """
    if not 0 <= i < b.n:
        msg = f"zero index {i} out of range for {b.n} zeros"
        raise IndexBoundsError(msg, "blaschke_derivative_at_zero_i")

    x = complex(b.zeros[i])
    own = 1.0 + 0j if x == 0 else -(abs(x) / x) / (1 - abs(x) ** 2)
    others = [complex(blaschke_factor(complex(s), x)) for k, s in enumerate(b.zeros) if k != i]
    return complex(own * np.prod(others)) if others else own


def model_conjugation_matrix(b: BlaschkeData, tol: Tolerances | None = None) -> ConjugationOperator:
    """Return the conjugation J_B of the model space in the kernel basis.

    The values (J k_i)(x_s) are B(x_s) / (x_s - x_i) off the diagonal and B'(x_i) on it,
    and J k_i is expanded in the dual basis. With inner products linear in the first
    slot the pairing <k_i, J k_j> is conj(B'(x_i)) on the diagonal and zero elsewhere.

    Args:
        b: Zeros of the product
        tol: Tolerances

    Returns:
        ConjugationOperator: Coordinates of J_B with the model Gram
    """
    g = model_gram(b, tol)
    x = b.zeros
    at_zeros = blaschke_eval(b, x)

    values = np.zeros((b.n, b.n), dtype=np.complex128)
    for i in range(b.n):
        for s in range(b.n):
            if s == i:
                values[s, i] = blaschke_derivative_at_zero_i(b, i)
            else:
                values[s, i] = at_zeros[s] / (x[s] - x[i])

    matrix = dual_gram(g, tol).entries.conj() @ values
    return ConjugationOperator(gram=g, matrix=matrix)


def conjugate_zeros(b: BlaschkeData) -> BlaschkeData:
    """Return the zeros of B^#, the complex conjugates of the zeros of B."""
    return BlaschkeData.model_construct(zeros=b.zeros.conj())


def normalized_kernel_matrix(g: GramMatrix, base: int = 0) -> ComplexArray:
    """Return F_ij = 1 - g_i0 g_0j / (g_ij g_00) normalized at the base index.

    Args:
        g: Gram matrix without zero entries
        base: Index the kernel is normalized at

    Returns:
        ComplexArray: Hermitian matrix F, zero in the base row and column
    """
    base = check_index(g, base, "normalized_kernel_matrix")
    e = g.entries
    column = e[:, base]
    f = 1.0 - np.outer(column, e[base, :]) / (e * e[base, base].real)
    return (f + f.conj().T) / 2


def _pick_spectrum(g: GramMatrix) -> tuple[NDArray[np.float64], ComplexArray]:
    return np.linalg.eigh(normalized_kernel_matrix(g))


def is_complete_pick(g: GramMatrix, tol: Tolerances | None = None) -> bool:
    """Return True if g is a rescaling of a Drury-Arveson Gram matrix.

    The normalized kernel matrix must be positive semidefinite within psd_tol.

    Args:
        g: Gram matrix
        tol: Tolerances

    Returns:
        bool: Membership in F

    Raises:
        DegenerateGramError: If g has a zero entry
    """
    tol = resolve_tolerances(tol)
    if is_degenerate(g, tol):
        msg = "Gram matrix has a zero entry"
        raise DegenerateGramError(msg, "is_complete_pick")

    eigenvalues, _ = _pick_spectrum(g)
    floor = -tol.psd_tol * max(1.0, float(eigenvalues[-1]))
    logger.debug(f"is_complete_pick: smallest eigenvalue {eigenvalues[0]:.3e} (floor {floor:.3e})")
    return bool(eigenvalues[0] >= floor)


def in_class_f(g: GramMatrix, tol: Tolerances | None = None) -> bool:
    """Return membership in F, reporting a Gram with zero entries as outside F."""
    if is_degenerate(g, tol):
        return False
    return is_complete_pick(g, tol)


def realize_in_ball(g: GramMatrix, tol: Tolerances | None = None) -> PickRealization:
    """Find points in a ball whose Drury-Arveson Gram rescales to g.

    The normalized kernel matrix is factored as F_ij = <b_j, b_i>; the points b_i then
    satisfy g_ij = lambda_i conj(lambda_j) / (1 - <b_j, b_i>) with lambda_i = g_i0 / sqrt(g_00).

    Args:
        g: Complete Pick Gram matrix
        tol: Tolerances

    Returns:
        PickRealization: Points of ambient dimension max(rank F, 1) and the witness

    Raises:
        NotCompletePickError: If g is not in F
        DegenerateGramError: If g has a zero entry
        VerificationError: If the relative round-trip residual exceeds match_tol
    """
    tol = resolve_tolerances(tol)
    if not is_complete_pick(g, tol):
        msg = "normalized kernel matrix is not positive semidefinite"
        raise NotCompletePickError(msg, "realize_in_ball")

    eigenvalues, vectors = _pick_spectrum(g)
    keep = eigenvalues > tol.psd_tol * max(float(eigenvalues[-1]), 0.0)
    rank = int(np.sum(keep))
    if rank == 0:
        points = np.zeros((g.n, 1), dtype=np.complex128)
    else:
        points = vectors[:, keep].conj() * np.sqrt(eigenvalues[keep])

    realized = PointSet.from_array(points, tol)
    lambdas = g.entries[:, 0] / np.sqrt(g.entries[0, 0].real)
    witness = RescalingWitness(lambdas=lambdas)

    rebuilt = witness.outer() * da_gram(realized, tol).entries
    residual = float(np.max(np.abs(rebuilt - g.entries)) / np.max(np.abs(g.entries)))
    logger.debug(f"realize_in_ball: rank {rank}, round-trip residual {residual:.3e}")
    if residual > tol.match_tol:
        msg = f"realized points rebuild the Gram only up to {residual:.3e}"
        raise VerificationError(msg, "realize_in_ball", {"residual": residual, "rank": rank})
    return PickRealization(points=realized, witness=witness, rank=rank, residual=residual)
