"""Command handlers of the pickspace command line."""

import argparse
from collections.abc import Callable

import numpy as np
from pydantic import BaseModel

from ..config.settings import get_settings
from ..core.classifier import classify_gram, classify_points, dual_membership_probe
from ..core.errors import IndexBoundsError, InvalidInputError
from ..core.generators import random_generic_points, random_geodesic_points
from ..core.gram import delta_matrix, dual_gram
from ..core.hyperbolic import find_congruence, in_single_geodesic
from ..core.multipliers import extremal_value_reformulations, extremal_vanishing_multiplier
from ..core.orthogonality import r_orthogonality_witness, rescale_to_orthogonal
from ..core.parsers import read_document
from ..core.pick import da_gram, model_gram, realize_in_ball
from ..models.documents import GramPayload, InputDocument, PointsPayload
from ..models.models import GramMatrix, Tolerances
from ..models.reports import (
    CongruenceReport,
    DeltaReport,
    ExtremalReport,
    OrthogonalizeReport,
)
from ..utils.logging import setup_logging

logger = setup_logging(__name__)


def resolve_command_tolerances(
    args: argparse.Namespace,
    document: InputDocument | None,
) -> Tolerances:
    """Combine settings, document overrides and command line flags, later ones winning.

    Args:
        args: Parsed arguments
        document: Input document, if the command reads one

    Returns:
        Tolerances: Tolerances for the command
    """
    tol = get_settings().tolerances()
    if document is not None and document.tolerances is not None:
        tol = document.tolerances.apply(tol)
    flags = {
        "psd_tol": args.tol_psd,
        "rankone_tol": args.tol_rankone,
        "match_tol": args.tol_match,
    }
    return tol.model_copy(update={k: v for k, v in flags.items() if v is not None})


def _load(args: argparse.Namespace, path: str) -> tuple[InputDocument, Tolerances]:
    document = read_document(path)
    return document, resolve_command_tolerances(args, document)


def _gram(document: InputDocument, tol: Tolerances) -> GramMatrix:
    if isinstance(document.payload, GramPayload):
        return document.payload.to_gram(tol)
    return da_gram(document.point_set(tol), tol)


def cmd_classify(args: argparse.Namespace) -> BaseModel:
    """Classify the space of a points, zeros or Gram document."""
    document, tol = _load(args, args.file)
    if isinstance(document.payload, GramPayload):
        return classify_gram(document.payload.to_gram(tol), tol)
    return classify_points(document.point_set(tol), tol)


def cmd_delta(args: argparse.Namespace) -> BaseModel:
    """Print the matrix of delta distances."""
    document, tol = _load(args, args.file)
    g = _gram(document, tol)
    return DeltaReport(n=g.n, delta=delta_matrix(g).tolist())


def cmd_dual(args: argparse.Namespace) -> BaseModel:
    """Print the dual Gram matrix as a gram document."""
    document, tol = _load(args, args.file)
    return GramPayload.from_gram(dual_gram(_gram(document, tol), tol))


def cmd_model(args: argparse.Namespace) -> BaseModel:
    """Print the model space Gram matrix of a zeros document as a gram document."""
    document, tol = _load(args, args.file)
    return GramPayload.from_gram(model_gram(document.blaschke(tol), tol))


def cmd_orthogonalize(args: argparse.Namespace) -> BaseModel:
    """Print the r-orthogonality witness and the orthogonal rescaled Gram matrix."""
    document, tol = _load(args, args.file)
    g = _gram(document, tol)
    report = r_orthogonality_witness(g, tol)
    rescaled = None
    if report.has_witness and report.witness is not None:
        rescaled = rescale_to_orthogonal(g, report.witness, tol)
    return OrthogonalizeReport(report=report, rescaled=rescaled)


def cmd_extremal(args: argparse.Namespace) -> BaseModel:
    """Print the extremal multiplier at the base index, vanishing at all other points."""
    document, tol = _load(args, args.file)
    g = _gram(document, tol)
    if not 1 <= args.base <= g.n:
        msg = f"--base must be between 1 and {g.n}, got {args.base}"
        raise IndexBoundsError(msg, "extremal")
    x = args.base - 1
    others = [j for j in range(g.n) if j != x]
    return ExtremalReport(
        solution=extremal_vanishing_multiplier(g, x, others, tol),
        reformulations=extremal_value_reformulations(g, x, tol),
    )


def cmd_geodesic(args: argparse.Namespace) -> BaseModel:
    """Print whether the points lie in one complex geodesic."""
    document, tol = _load(args, args.file)
    return in_single_geodesic(document.point_set(tol), tol)


def cmd_congruent(args: argparse.Namespace) -> BaseModel:
    """Print whether two point sets are congruent under a ball automorphism."""
    first, tol = _load(args, args.first)
    second = read_document(args.second)
    found = find_congruence(first.point_set(tol), second.point_set(tol), tol)
    if found is None:
        return CongruenceReport(congruent=False)
    permutation, witness = found
    return CongruenceReport(congruent=True, permutation=permutation, witness=witness)


def cmd_realize(args: argparse.Namespace) -> BaseModel:
    """Print points of a ball realizing a complete Pick Gram matrix."""
    document, tol = _load(args, args.file)
    return realize_in_ball(_gram(document, tol), tol)


def cmd_probe_dual(args: argparse.Namespace) -> BaseModel:
    """Print whether the dual space is in F and in the model class."""
    document, tol = _load(args, args.file)
    return dual_membership_probe(_gram(document, tol), tol)


def cmd_gen(args: argparse.Namespace) -> BaseModel:
    """Generate a reproducible random points document."""
    tol = resolve_command_tolerances(args, None)
    if args.n < 1 or args.m < 1:
        msg = f"--n and --m must be positive, got n={args.n}, m={args.m}"
        raise InvalidInputError(msg, "gen")
    rng = np.random.default_rng(args.seed)
    if args.geodesic:
        ps = random_geodesic_points(rng, args.n, args.m)
    else:
        ps = random_generic_points(rng, args.n, args.m, args.margin, tol)
    logger.info(f"Generated {ps.n} points in B^{ps.m} with seed {args.seed}")
    return PointsPayload.from_point_set(ps)


COMMANDS: dict[str, Callable[[argparse.Namespace], BaseModel]] = {
    "classify": cmd_classify,
    "delta": cmd_delta,
    "dual": cmd_dual,
    "model": cmd_model,
    "orthogonalize": cmd_orthogonalize,
    "extremal": cmd_extremal,
    "geodesic": cmd_geodesic,
    "congruent": cmd_congruent,
    "realize": cmd_realize,
    "probe-dual": cmd_probe_dual,
    "gen": cmd_gen,
}
