"""Criteria on the geometry of the point set: one complex geodesic, or geodesic triples."""

from ..core.criterion import BaseCriterion, ClassificationContext
from ..core.hyperbolic import triple_geodesic_margin
from ..models.reports import CriterionResult, Verdict


class GeodesicCriterion(BaseCriterion):
    """The points lie in a single complex geodesic."""

    key = "c1_geodesic"

    def evaluate(self, ctx: ClassificationContext) -> CriterionResult:
        """Evaluate the criterion.

        Args:
            ctx: Classification context

        Returns:
            CriterionResult: Verdict with the singular value ratio and the geodesic direction
        """
        if ctx.points is None:
            return self.not_applicable("no point set")
        membership = ctx.geodesic
        return self.result(
            Verdict.of(membership.in_geodesic),
            residual=membership.margin,
            threshold=ctx.tol.rankone_tol,
            direction=membership.direction,
        )


class TriplesCriterion(BaseCriterion):
    """Every triple {x_1, x_i, x_j} lies in a single complex geodesic."""

    key = "c2_triples"

    def evaluate(self, ctx: ClassificationContext) -> CriterionResult:
        """Evaluate the criterion.

        Args:
            ctx: Classification context

        Returns:
            CriterionResult: Verdict with the worst singular value ratio over the triples
        """
        if ctx.points is None:
            return self.not_applicable("no point set")
        if ctx.n < 3:
            return self.not_applicable("fewer than three points, same as c1_geodesic")
        margin = triple_geodesic_margin(ctx.points, ctx.tol)
        return self.result(
            Verdict.of(margin <= ctx.tol.rankone_tol),
            residual=margin,
            threshold=ctx.tol.rankone_tol,
        )
