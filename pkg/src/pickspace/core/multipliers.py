"""Multiplier norms, extremal vanishing multipliers and the Gleason distance."""

from collections.abc import Sequence

import numpy as np
import scipy.linalg

from ..models.models import GramMatrix, MultiplierValues, Tolerances, resolve_tolerances
from ..models.reports import ExtremalReformulations, ExtremalSolution
from ..utils.logging import setup_logging
from .errors import (
    DegenerateGramError,
    IndexOverlapError,
    InvalidInputError,
    SingularGramError,
    SizeMismatchError,
    VerificationError,
)
from .gram import check_index, delta_pair, dual_gram, regular_subspace, zero_entries

logger = setup_logging(__name__)

BISECTION_WIDTH = 1e-10


def multiplier_norm(g: GramMatrix, mv: MultiplierValues) -> float:
    """Return the norm of the multiplication operator with the given values.

    This is the smallest t with t^2 g - D^H g D positive semidefinite, D = diag(values),
    obtained from the largest generalized eigenvalue of the pencil (D^H g D, g).

    Args:
        g: Gram matrix
        mv: Values of the multiplier at the n points

    Returns:
        float: Multiplier norm

    Raises:
        SizeMismatchError: If there is not one value per kernel
        SingularGramError: If the generalized eigenproblem fails
    """
    if mv.n != g.n:
        msg = f"{mv.n} multiplier values for {g.n} kernels"
        raise SizeMismatchError(msg, "multiplier_norm")

    d = mv.values
    pencil = d.conj()[:, None] * g.entries * d[None, :]
    pencil = (pencil + pencil.conj().T) / 2
    try:
        eigenvalues = scipy.linalg.eigh(pencil, g.entries, eigvals_only=True)
    except scipy.linalg.LinAlgError as e:
        raise SingularGramError(str(e), "multiplier_norm") from e
    return float(np.sqrt(max(float(eigenvalues[-1]), 0.0)))


def _restricted(
    g: GramMatrix,
    x: int,
    zero_set: Sequence[int],
    tol: Tolerances,
    operation: str,
) -> tuple[GramMatrix, list[int], int]:
    x = check_index(g, x, operation)
    zeros = sorted({check_index(g, y, operation) for y in zero_set})
    if x in zeros:
        msg = f"index {x} cannot be both the evaluation point and a zero"
        raise IndexOverlapError(msg, operation)
    support = sorted([*zeros, x])
    return regular_subspace(g, support, tol), support, support.index(x)


def extremal_vanishing_multiplier(
    g: GramMatrix,
    x: int,
    zero_set: Sequence[int],
    tol: Tolerances | None = None,
) -> ExtremalSolution:
    """Solve for the norm one multiplier vanishing on Y with largest real value at x.

    The problem lives on the regular subspace spanned by the kernels at Y and x, where
    the value is (g_xx (g^-1)_xx)^(-1/2) and the extremal vector is k_x^# / |k_x^#|.

    Args:
        g: Gram matrix
        x: 0-based index of the evaluation point
        zero_set: 0-based indices where the multiplier vanishes
        tol: Tolerances

    Returns:
        ExtremalSolution: Value, multiplier values and extremal vector on the support

    Raises:
        IndexOverlapError: If x belongs to the zero set
        SingularGramError: If the restricted Gram is singular
        VerificationError: If the extremal identity fails to hold
    """
    tol = resolve_tolerances(tol)
    sub, support, pos = _restricted(g, x, zero_set, tol, "extremal_vanishing_multiplier")
    dual = dual_gram(sub, tol).entries
    g_xx = float(sub.entries[pos, pos].real)
    dual_xx = float(dual[pos, pos].real)

    value = (g_xx * dual_xx) ** -0.5
    values = np.zeros(sub.n, dtype=np.complex128)
    values[pos] = value
    h = dual[:, pos].conj() / np.sqrt(dual_xx)

    # m k_x / |k_x| and h agree as functions on the support
    lhs = values * sub.entries[pos, :] / np.sqrt(g_xx)
    rhs = h @ sub.entries
    defect = float(np.max(np.abs(lhs - rhs)))
    if defect > tol.match_tol * max(1.0, float(np.max(np.abs(rhs)))):
        msg = f"extremal identity fails by {defect:.3e}"
        raise VerificationError(msg, "extremal_vanishing_multiplier", {"defect": defect})

    logger.debug(f"extremal_vanishing_multiplier: x={x}, {len(support) - 1} zeros, {value:.12g}")
    return ExtremalSolution(
        index=support[pos],
        zero_set=[i for i in support if i != support[pos]],
        support=support,
        value=value,
        multiplier=MultiplierValues.from_array(values),
        h=h,
    )


def extremal_value_bisection_oracle(
    g: GramMatrix,
    x: int,
    zero_set: Sequence[int],
    tol: Tolerances | None = None,
) -> float:
    """Estimate the extremal value by bisecting on the multiplier norm constraint.

    The values v at x and 0 on Y are feasible when their multiplier norm on the
    restricted space is at most 1 + psd_tol.

    Args:
        g: Gram matrix
        x: 0-based index of the evaluation point
        zero_set: 0-based indices where the multiplier vanishes
        tol: Tolerances

    Returns:
        float: Largest feasible v, to within 1e-10
    """
    tol = resolve_tolerances(tol)
    sub, _, pos = _restricted(g, x, zero_set, tol, "extremal_value_bisection_oracle")
    unit = np.zeros(sub.n, dtype=np.complex128)
    unit[pos] = 1.0

    def feasible(v: float) -> bool:
        return multiplier_norm(sub, MultiplierValues.from_array(v * unit)) <= 1 + tol.psd_tol

    lo, hi = 0.0, 1.0
    while hi - lo > BISECTION_WIDTH:
        mid = (lo + hi) / 2
        if feasible(mid):
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def gleason_delta(g: GramMatrix, i: int, j: int, tol: Tolerances | None = None) -> float:
    """Return the largest value at i of a norm one multiplier vanishing at j.

    Args:
        g: Gram matrix
        i: Evaluation index
        j: Zero index, different from i
        tol: Tolerances

    Returns:
        float: Gleason distance, equal to delta_pair(g, i, j)

    Raises:
        InvalidInputError: If i == j
        DegenerateGramError: If the kernels at i and j are orthogonal
    """
    i = check_index(g, i, "gleason_delta")
    j = check_index(g, j, "gleason_delta")
    if i == j:
        msg = "Gleason distance needs two different indices"
        raise InvalidInputError(msg, "gleason_delta")
    if zero_entries(g, tol)[i, j]:
        msg = f"kernels {i} and {j} are orthogonal"
        raise DegenerateGramError(msg, "gleason_delta")
    return extremal_vanishing_multiplier(g, i, [j], tol).value


def idempotent_norm(g: GramMatrix, i: int) -> float:
    """Return the multiplier norm of the idempotent that is 1 at i and 0 elsewhere."""
    i = check_index(g, i, "idempotent_norm")
    values = np.zeros(g.n, dtype=np.complex128)
    values[i] = 1.0
    return multiplier_norm(g, MultiplierValues.from_array(values))


def delta_product(g: GramMatrix, x: int) -> float:
    """Return the product of delta(x, j) over all j != x."""
    x = check_index(g, x, "delta_product")
    return float(np.prod([delta_pair(g, x, j) for j in range(g.n) if j != x]))


def extremal_value_reformulations(
    g: GramMatrix,
    x: int,
    tol: Tolerances | None = None,
) -> ExtremalReformulations:
    """Evaluate the extremal value at x, vanishing on every other index, three ways.

    Args:
        g: Gram matrix
        x: 0-based index of the evaluation point
        tol: Tolerances

    Returns:
        ExtremalReformulations: Closed form, idempotent reciprocal, oracle and product of deltas
    """
    tol = resolve_tolerances(tol)
    others = [j for j in range(g.n) if j != x]
    return ExtremalReformulations(
        index=x,
        closed_form=extremal_vanishing_multiplier(g, x, others, tol).value,
        idempotent_reciprocal=1.0 / idempotent_norm(g, x),
        oracle=extremal_value_bisection_oracle(g, x, others, tol),
        delta_product=delta_product(g, x),
    )
