"""Orthogonal Gram matrices, r-orthogonality, conjugations and the dual Gram of a subspace."""

from itertools import combinations

import numpy as np

from ..models.arrays import ComplexArray
from ..models.models import GramMatrix, RescalingWitness, Tolerances, resolve_tolerances
from ..models.reports import ConjugationOperator, OrthogonalityReport, OrthogonalityVerdict
from ..utils.logging import setup_logging
from .errors import (
    InvalidInputError,
    InvalidWitnessError,
    NotOrthogonalError,
    SizeMismatchError,
    ZeroPivotError,
)
from .gram import check_index, dual_gram, is_degenerate, regular_subspace

logger = setup_logging(__name__)


def orthogonality_residual(a: ComplexArray) -> float:
    """Return max |a a^T - I| relative to max(1, max |a_ij|)^2."""
    n = a.shape[0]
    scale = max(1.0, float(np.max(np.abs(a)))) ** 2
    return float(np.max(np.abs(a @ a.T - np.eye(n))) / scale)


def is_orthogonal_gram(g: GramMatrix, tol: Tolerances | None = None) -> bool:
    """Return True if g g^T = I within match_tol, so that sum_s k_is k_js = delta_ij."""
    tol = resolve_tolerances(tol)
    return orthogonality_residual(g.entries) <= tol.match_tol


def _rescaled_entries(g: GramMatrix, w: RescalingWitness) -> ComplexArray:
    if w.n != g.n:
        msg = f"witness has {w.n} factors for {g.n} kernels"
        raise SizeMismatchError(msg, "rescale_to_orthogonal")
    return np.asarray(g.entries / w.outer(), dtype=np.complex128)


def r_orthogonality_witness(g: GramMatrix, tol: Tolerances | None = None) -> OrthogonalityReport:
    """Decide whether g is a rescaling of an orthogonal Gram matrix.

    The rescaled matrix g_ij / (lambda_i conj(lambda_j)) is orthogonal iff the ratio
    (g^-1)_ij / conj(g_ij) equals alpha_i conj(alpha_j) with alpha_i = conj(lambda_i)^-2.

    Args:
        g: Gram matrix
        tol: Tolerances

    Returns:
        OrthogonalityReport: Verdict with witness, residual and rank-one margin

    Raises:
        SingularGramError: If g cannot be inverted
    """
    tol = resolve_tolerances(tol)
    if is_degenerate(g, tol):
        return OrthogonalityReport(verdict=OrthogonalityVerdict.DEGENERATE)

    residual = orthogonality_residual(g.entries)
    if residual <= tol.match_tol:
        return OrthogonalityReport(
            verdict=OrthogonalityVerdict.ORTHOGONAL,
            witness=RescalingWitness(lambdas=np.ones(g.n, dtype=np.complex128)),
            residual=residual,
            rankone_margin=0.0,
        )

    ratio = dual_gram(g, tol).entries / g.entries.conj()
    ratio = (ratio + ratio.conj().T) / 2
    eigenvalues, vectors = np.linalg.eigh(ratio)
    order = np.argsort(np.abs(eigenvalues))[::-1]
    leading = float(eigenvalues[order[0]])
    margin = float(abs(eigenvalues[order[1]]) / abs(leading)) if g.n > 1 else 0.0
    logger.debug(f"r_orthogonality_witness: leading {leading:.6g}, margin {margin:.3e}")
    if leading <= 0 or margin > tol.rankone_tol:
        return OrthogonalityReport(
            verdict=OrthogonalityVerdict.NOT_R_ORTHOGONAL,
            rankone_margin=margin,
        )

    alpha = np.sqrt(leading) * vectors[:, order[0]]
    witness = RescalingWitness(lambdas=np.sqrt(1.0 / alpha.conj()))
    residual = orthogonality_residual(_rescaled_entries(g, witness))
    if residual > tol.match_tol:
        logger.warning(
            f"r_orthogonality_witness: rank-one ratio but rescaled residual {residual:.3e}"
        )
        return OrthogonalityReport(
            verdict=OrthogonalityVerdict.NOT_R_ORTHOGONAL,
            residual=residual,
            rankone_margin=margin,
        )
    return OrthogonalityReport(
        verdict=OrthogonalityVerdict.R_ORTHOGONAL,
        witness=witness,
        residual=residual,
        rankone_margin=margin,
    )


def rescale_to_orthogonal(
    g: GramMatrix,
    w: RescalingWitness,
    tol: Tolerances | None = None,
) -> GramMatrix:
    """Return the orthogonal Gram matrix g_ij / (lambda_i conj(lambda_j)).

    Args:
        g: Gram matrix
        w: Witness from r_orthogonality_witness
        tol: Tolerances

    Returns:
        GramMatrix: Orthogonal Gram matrix

    Raises:
        InvalidWitnessError: If the rescaled matrix is not orthogonal
    """
    tol = resolve_tolerances(tol)
    rescaled = _rescaled_entries(g, w)
    residual = orthogonality_residual(rescaled)
    if residual > tol.match_tol:
        msg = f"rescaled Gram is not orthogonal (residual {residual:.3e})"
        raise InvalidWitnessError(msg, "rescale_to_orthogonal", {"residual": residual})
    return GramMatrix.from_array(rescaled, tol)


def conjugation_from_orthogonal(
    g: GramMatrix,
    tol: Tolerances | None = None,
) -> ConjugationOperator:
    """Return the conjugation sending each kernel k_i to its dual vector k_i^#.

    The coordinates of k_i^# are the columns of conj(g^-1), which equals g when g is
    orthogonal.

    Raises:
        NotOrthogonalError: If g is not an orthogonal matrix
    """
    tol = resolve_tolerances(tol)
    residual = orthogonality_residual(g.entries)
    if residual > tol.match_tol:
        msg = f"Gram matrix is not orthogonal (residual {residual:.3e})"
        raise NotOrthogonalError(msg, "conjugation_from_orthogonal", {"residual": residual})
    return ConjugationOperator(gram=g, matrix=dual_gram(g, tol).entries.conj())


def conjugation_diagonal(
    conjugation: ConjugationOperator,
    tol: Tolerances | None = None,
) -> ComplexArray:
    """Return the c_i of a conjugation with <k_i, J k_j> = c_i delta_ij.

    Raises:
        InvalidInputError: If the pairing has nonzero off-diagonal entries
    """
    tol = resolve_tolerances(tol)
    pairing = conjugation.pairing()
    diagonal = pairing.diagonal().copy()
    off = pairing - np.diag(diagonal)
    scale = max(1.0, float(np.max(np.abs(diagonal))))
    if np.max(np.abs(off), initial=0.0) > tol.match_tol * scale:
        msg = "conjugation does not pair kernels diagonally"
        raise InvalidInputError(msg, "conjugation_diagonal")
    return diagonal


def exact_conjugation_rescaling(
    conjugation: ConjugationOperator,
    tol: Tolerances | None = None,
) -> tuple[GramMatrix, RescalingWitness, ConjugationOperator]:
    """Rescale kernels by c_i^(-1/2) so that the conjugation maps them to the dual basis.

    Args:
        conjugation: Conjugation with <k_i, J k_j> = c_i delta_ij
        tol: Tolerances

    Returns:
        tuple[GramMatrix, RescalingWitness, ConjugationOperator]: Rescaled Gram matrix,
        the witness lambda_i = c_i^(1/2) relating it to the original one, and J in the
        rescaled basis
    """
    tol = resolve_tolerances(tol)
    c = conjugation_diagonal(conjugation, tol)
    witness = RescalingWitness(lambdas=np.sqrt(c))
    mu = 1.0 / witness.lambdas
    rescaled = GramMatrix.from_array(conjugation.gram.entries / witness.outer(), tol)
    matrix = (1.0 / mu)[:, None] * conjugation.matrix * mu.conj()[None, :]
    return rescaled, witness, ConjugationOperator(gram=rescaled, matrix=matrix)


def dual_gram_of_subspace(
    g_dual: GramMatrix,
    drop: int,
    tol: Tolerances | None = None,
) -> GramMatrix:
    """Return the dual Gram of the regular subspace without one kernel.

    With the dropped index moved last, the entries are k#_ij - k#_in k#_nj / k#_nn.

    Args:
        g_dual: Dual Gram matrix of the whole space
        drop: 0-based index of the kernel to remove
        tol: Tolerances

    Returns:
        GramMatrix: (n-1) x (n-1) dual Gram of the retained kernels, in their original order

    Raises:
        InvalidInputError: If there is only one kernel
        ZeroPivotError: If the pivot k#_nn vanishes
    """
    tol = resolve_tolerances(tol)
    drop = check_index(g_dual, drop, "dual_gram_of_subspace")
    if g_dual.n < 2:
        msg = "cannot drop the only kernel"
        raise InvalidInputError(msg, "dual_gram_of_subspace")

    order = [i for i in range(g_dual.n) if i != drop] + [drop]
    p = g_dual.entries[np.ix_(order, order)]
    pivot = float(p[-1, -1].real)
    if pivot <= tol.psd_tol * float(np.max(np.abs(p))):
        msg = f"pivot {pivot:.3e} vanishes"
        raise ZeroPivotError(msg, "dual_gram_of_subspace")
    reduced = p[:-1, :-1] - np.outer(p[:-1, -1], p[-1, :-1]) / pivot
    return GramMatrix.from_array(reduced, tol)


def orthogonality_hereditary_check(g: GramMatrix, tol: Tolerances | None = None) -> bool:
    """Check that an orthogonal space stays r-orthogonal after deleting any one kernel.

    For each deletion the dual Gram of the retained kernels is computed by the Schur
    reduction, checked against the retained Gram (sum_s k_is g_sj = delta_ij) and the
    retained Gram is tested for r-orthogonality.

    Raises:
        NotOrthogonalError: If g is not orthogonal
        InvalidInputError: If n < 2
    """
    tol = resolve_tolerances(tol)
    if not is_orthogonal_gram(g, tol):
        msg = "hereditary check needs an orthogonal Gram matrix"
        raise NotOrthogonalError(msg, "orthogonality_hereditary_check")
    if g.n < 2:
        msg = "hereditary check needs at least two kernels"
        raise InvalidInputError(msg, "orthogonality_hereditary_check")

    dual = dual_gram(g, tol)
    for drop in range(g.n):
        retained = [i for i in range(g.n) if i != drop]
        sub = regular_subspace(g, retained, tol)
        reduced = dual_gram_of_subspace(dual, drop, tol)
        product = sub.entries @ reduced.entries
        scale = max(1.0, float(np.max(np.abs(sub.entries)) * np.max(np.abs(reduced.entries))))
        if np.max(np.abs(product - np.eye(g.n - 1))) > tol.match_tol * scale:
            logger.debug(f"orthogonality_hereditary_check: Schur reduction fails at {drop}")
            return False
        if is_orthogonal_gram(sub, tol):
            continue
        verdict = r_orthogonality_witness(sub, tol).verdict
        if verdict is not OrthogonalityVerdict.R_ORTHOGONAL:
            logger.debug(f"orthogonality_hereditary_check: deletion {drop} gives {verdict.value}")
            return False
    return True


def triple_r_orthogonality(
    g: GramMatrix,
    tol: Tolerances | None = None,
) -> dict[tuple[int, int], OrthogonalityReport]:
    """Return the r-orthogonality report of every regular subspace {k_1, k_i, k_j}.

    Raises:
        InvalidInputError: If n < 3
    """
    if g.n < 3:
        msg = f"triples need at least 3 kernels, got {g.n}"
        raise InvalidInputError(msg, "triple_r_orthogonality")
    return {
        (i, j): r_orthogonality_witness(regular_subspace(g, [0, i, j], tol), tol)
        for i, j in combinations(range(1, g.n), 2)
    }
