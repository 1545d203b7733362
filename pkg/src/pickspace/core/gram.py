"""Gram matrix operations: dual basis, the delta metric, rescalings and regular subspaces."""

from collections.abc import Sequence

import numpy as np
import scipy.linalg
from numpy.typing import NDArray

from ..models.arrays import ComplexArray
from ..models.models import GramMatrix, RescalingWitness, Tolerances, resolve_tolerances
from ..utils.logging import setup_logging
from .errors import (
    DegenerateGramError,
    IndexBoundsError,
    InvalidInputError,
    SingularGramError,
    SizeMismatchError,
)

logger = setup_logging(__name__)


def check_index(g: GramMatrix, i: int, operation: str) -> int:
    """Validate a 0-based kernel index.

    Args:
        g: Gram matrix the index refers to
        i: Index to check
        operation: Name of the calling operation

    Returns:
        int: The index as a plain int

    Raises:
        IndexBoundsError: If the index is out of range
    """
    if not 0 <= int(i) < g.n:
        msg = f"index {i} out of range for {g.n} kernels"
        raise IndexBoundsError(msg, operation, {"index": int(i), "n": g.n})
    return int(i)


def dual_gram(g: GramMatrix, tol: Tolerances | None = None) -> GramMatrix:
    """Return the Gram matrix of the dual basis, the inverse of g.

    Args:
        g: Positive definite Gram matrix
        tol: Tolerances

    Returns:
        GramMatrix: Inverse of g, exactly Hermitian

    Raises:
        SingularGramError: If g is numerically singular
    """
    try:
        factor = scipy.linalg.cho_factor(g.entries, lower=True)
        inverse = scipy.linalg.cho_solve(factor, np.eye(g.n, dtype=np.complex128))
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as e:
        msg = f"Cholesky factorization failed: {e!s}"
        raise SingularGramError(msg, "dual_gram") from e

    inverse = (inverse + inverse.conj().T) / 2
    return GramMatrix.from_array(inverse, tol)


def delta_pair(g: GramMatrix, i: int, j: int) -> float:
    """Return delta(k_i, k_j) = sqrt(1 - |g_ij|^2 / (g_ii g_jj)).

    Args:
        g: Gram matrix
        i: First index
        j: Second index

    Returns:
        float: Distance in [0, 1]
    """
    i = check_index(g, i, "delta_pair")
    j = check_index(g, j, "delta_pair")
    if i == j:
        return 0.0

    e = g.entries
    ratio = abs(e[i, j]) ** 2 / (e[i, i].real * e[j, j].real)
    return float(np.sqrt(min(1.0, max(0.0, 1.0 - ratio))))


def delta_matrix(g: GramMatrix) -> NDArray[np.float64]:
    """Return the matrix of all pairwise delta values, zero on the diagonal."""
    e = g.entries
    diagonal = e.diagonal().real
    ratio = np.abs(e) ** 2 / np.outer(diagonal, diagonal)
    out = np.sqrt(np.clip(1.0 - ratio, 0.0, 1.0))
    np.fill_diagonal(out, 0.0)
    return out


def delta_via_projections(g: GramMatrix, i: int, j: int) -> float:
    """Return ||P_i - P_j|| for the orthogonal projections onto k_i and k_j.

    The kernels are represented by the rows of the Cholesky factor L of g = L L^H,
    so that g_ij is the standard inner product of rows i and j.

    Args:
        g: Gram matrix
        i: First index
        j: Second index

    Returns:
        float: Spectral norm of the difference of the projections

    Raises:
        SingularGramError: If the factorization fails
    """
    i = check_index(g, i, "delta_via_projections")
    j = check_index(g, j, "delta_via_projections")
    if i == j:
        return 0.0

    try:
        factor = scipy.linalg.cholesky(g.entries, lower=True)
    except scipy.linalg.LinAlgError as e:
        raise SingularGramError(str(e), "delta_via_projections") from e

    def projection(v: ComplexArray) -> ComplexArray:
        return np.outer(v, v.conj()) / np.vdot(v, v).real

    difference = projection(factor[i]) - projection(factor[j])
    return float(np.linalg.norm(difference, ord=2))


def zero_entries(g: GramMatrix, tol: Tolerances | None = None) -> NDArray[np.bool_]:
    """Return the mask of off-diagonal entries that vanish within match_tol.

    An entry counts as zero when |g_ij| <= match_tol * sqrt(g_ii g_jj).

    Args:
        g: Gram matrix
        tol: Tolerances

    Returns:
        NDArray[np.bool_]: Boolean mask, False on the diagonal
    """
    tol = resolve_tolerances(tol)
    diagonal = g.entries.diagonal().real
    mask = np.abs(g.entries) <= tol.match_tol * np.sqrt(np.outer(diagonal, diagonal))
    np.fill_diagonal(mask, False)
    return mask


def is_degenerate(g: GramMatrix, tol: Tolerances | None = None) -> bool:
    """Return True if some pair of kernels is orthogonal."""
    return bool(np.any(zero_entries(g, tol)))


def apply_rescaling(
    h: GramMatrix,
    w: RescalingWitness,
    tol: Tolerances | None = None,
) -> GramMatrix:
    """Return the Gram matrix with entries lambda_i conj(lambda_j) h_ij.

    Args:
        h: Gram matrix to rescale
        w: Rescaling factors
        tol: Tolerances

    Returns:
        GramMatrix: Rescaled Gram matrix

    Raises:
        SizeMismatchError: If the witness has the wrong length
    """
    if w.n != h.n:
        msg = f"witness has {w.n} factors for {h.n} kernels"
        raise SizeMismatchError(msg, "apply_rescaling")
    return GramMatrix.from_array(w.outer() * h.entries, tol)


def are_rescalings(
    g: GramMatrix,
    h: GramMatrix,
    tol: Tolerances | None = None,
) -> RescalingWitness | None:
    """Decide whether g_ij = lambda_i conj(lambda_j) h_ij for nonzero lambdas.

    The entrywise ratio matrix must be Hermitian of rank one. The witness is read off
    its leading singular pair and phase-normalized so that lambda_1 is real positive.

    Args:
        g: First Gram matrix
        h: Second Gram matrix
        tol: Tolerances

    Returns:
        RescalingWitness | None: Witness, or None if the matrices are not rescalings

    Raises:
        SizeMismatchError: If the dimensions differ
        DegenerateGramError: If both matrices have zero entries at the same places
    """
    tol = resolve_tolerances(tol)
    if g.n != h.n:
        msg = f"cannot compare Gram matrices of sizes {g.n} and {h.n}"
        raise SizeMismatchError(msg, "are_rescalings")

    zeros_g = zero_entries(g, tol)
    zeros_h = zero_entries(h, tol)
    if not np.array_equal(zeros_g, zeros_h):
        logger.debug("are_rescalings: zero patterns differ")
        return None
    if np.any(zeros_g):
        msg = "ratio test needs Gram matrices without zero entries"
        raise DegenerateGramError(msg, "are_rescalings", {"zeros": int(np.sum(zeros_g)) // 2})

    ratio = g.entries / h.entries
    u, s, _ = np.linalg.svd(ratio)
    margin = float(s[1] / s[0]) if g.n > 1 else 0.0
    if margin > tol.rankone_tol:
        logger.debug(f"are_rescalings: ratio matrix not rank one (margin {margin:.3e})")
        return None

    lambdas = np.sqrt(s[0]) * u[:, 0]
    lambdas = lambdas * np.conj(lambdas[0]) / abs(lambdas[0])
    residual = float(np.max(np.abs(g.entries - np.outer(lambdas, lambdas.conj()) * h.entries)))
    if residual > tol.match_tol * g.norm:
        logger.debug(f"are_rescalings: witness residual {residual:.3e} too large")
        return None

    logger.debug(f"are_rescalings: witness found (margin {margin:.3e}, residual {residual:.3e})")
    return RescalingWitness(lambdas=lambdas)


def regular_subspace(
    g: GramMatrix,
    idx: Sequence[int],
    tol: Tolerances | None = None,
) -> GramMatrix:
    """Return the principal submatrix of g on the given indices.

    Args:
        g: Gram matrix
        idx: Nonempty, strictly increasing indices
        tol: Tolerances

    Returns:
        GramMatrix: Gram matrix of the regular subspace spanned by those kernels

    Raises:
        InvalidInputError: If idx is empty or not strictly increasing
        IndexBoundsError: If an index is out of range
    """
    indices = [check_index(g, i, "regular_subspace") for i in idx]
    if not indices:
        msg = "regular subspace needs at least one index"
        raise InvalidInputError(msg, "regular_subspace")
    if any(a >= b for a, b in zip(indices, indices[1:], strict=False)):
        msg = f"indices must be strictly increasing, got {indices}"
        raise InvalidInputError(msg, "regular_subspace")
    return GramMatrix.from_array(g.entries[np.ix_(indices, indices)], tol)
