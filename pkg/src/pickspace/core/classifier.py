"""Classification of complete Pick spaces by the six equivalent model space conditions."""

from ..criteria import registry
from ..models.models import GramMatrix, PointSet, Tolerances, resolve_tolerances
from ..models.reports import ClassificationReport, CriterionResult, DualMembership, Verdict
from ..utils.logging import setup_logging
from .criterion import ClassificationContext
from .errors import DegenerateGramError, NotInFError
from .gram import dual_gram, is_degenerate
from .pick import da_gram, in_class_f, is_complete_pick, realize_in_ball

logger = setup_logging(__name__)


def _assemble(
    results: dict[str, CriterionResult],
    n: int,
    m: int | None,
    direct: list[CriterionResult] | None = None,
) -> ClassificationReport:
    applicable = [r for r in results.values() if r.applicable]
    verdicts = {r.verdict for r in applicable}

    direct_agrees = None
    if direct is not None:
        direct_agrees = all(d.verdict is results[d.name].verdict for d in direct)

    consistent = len(verdicts) <= 1 and direct_agrees is not False
    if consistent:
        is_model_space = not verdicts or verdicts == {Verdict.TRUE}
    else:
        is_model_space = results["c6_model"].verdict is Verdict.TRUE
        summary = ", ".join(f"{r.name}={r.verdict.value}" for r in results.values())
        logger.warning(f"inconsistent classification ({summary}); reporting c6_model")

    report = ClassificationReport(
        n=n,
        m=m,
        consistent=consistent,
        is_model_space=is_model_space,
        direct_checks=direct,
        direct_agrees=direct_agrees,
        **results,
    )
    if report.borderline:
        names = ", ".join(c.name for c in report.criteria if c.borderline)
        logger.warning(f"residual within a factor of ten of its threshold: {names}")
    return report


def classify_points(ps: PointSet, tol: Tolerances | None = None) -> ClassificationReport:
    """Evaluate all six conditions on the Drury-Arveson space of a point set.

    Args:
        ps: Distinct points of a ball
        tol: Tolerances

    Returns:
        ClassificationReport: Per-criterion verdicts and the consistency flag
    """
    tol = resolve_tolerances(tol)
    ctx = ClassificationContext(da_gram(ps, tol), tol, ps)
    results = {c.key: c.evaluate(ctx) for c in registry.get_all_criteria()}
    report = _assemble(results, ps.n, ps.m)
    logger.debug(f"classify_points: n={ps.n}, model space {report.is_model_space}")
    return report


def classify_gram(g: GramMatrix, tol: Tolerances | None = None) -> ClassificationReport:
    """Classify a complete Pick Gram matrix.

    The Gram matrix is realized by points of a ball and classified through them; the
    Gram-intrinsic conditions are also evaluated on g itself and must agree.

    Args:
        g: Gram matrix in F
        tol: Tolerances

    Returns:
        ClassificationReport: Report of the realized points with the direct checks attached

    Raises:
        NotInFError: If g is not a complete Pick Gram matrix
        DegenerateGramError: If g has a zero entry
    """
    tol = resolve_tolerances(tol)
    if not is_complete_pick(g, tol):
        msg = "Gram matrix is not complete Pick"
        raise NotInFError(msg, "classify_gram")

    realization = realize_in_ball(g, tol)
    points = realization.points
    ctx = ClassificationContext(da_gram(points, tol), tol, points)
    results = {c.key: c.evaluate(ctx) for c in registry.get_all_criteria()}

    direct_ctx = ClassificationContext(g, tol)
    direct = [c.evaluate(direct_ctx) for c in registry.get_intrinsic_criteria()]
    return _assemble(results, g.n, points.m, direct)


def dual_membership_probe(g: GramMatrix, tol: Tolerances | None = None) -> DualMembership:
    """Decide whether the dual space lies in F and in the model class.

    Args:
        g: Gram matrix without zero entries
        tol: Tolerances

    Returns:
        DualMembership: Membership flags, the dual Gram and its classification when in F

    Raises:
        DegenerateGramError: If g has a zero entry
    """
    tol = resolve_tolerances(tol)
    if is_degenerate(g, tol):
        msg = "Gram matrix has a zero entry"
        raise DegenerateGramError(msg, "dual_membership_probe")

    dual = dual_gram(g, tol)
    in_f = in_class_f(dual, tol)
    classification = classify_gram(dual, tol) if in_f else None
    return DualMembership(
        dual_in_f=in_f,
        dual_in_m=classification is not None and classification.is_model_space,
        dual_degenerate=is_degenerate(dual, tol),
        dual_gram=dual,
        dual_classification=classification,
    )
