"""Criteria on orthogonal rescalings of the Gram matrix."""

import numpy as np

from ..core.criterion import BaseCriterion, ClassificationContext
from ..core.errors import InvalidWitnessError
from ..core.orthogonality import orthogonality_residual, rescale_to_orthogonal
from ..models.reports import CriterionResult, OrthogonalityVerdict, Verdict


class ROrthogonalCriterion(BaseCriterion):
    """The space is r-orthogonal."""

    key = "c4_r_orthogonal"
    intrinsic = True

    def evaluate(self, ctx: ClassificationContext) -> CriterionResult:
        """Evaluate the criterion.

        Args:
            ctx: Classification context

        Returns:
            CriterionResult: Verdict with the rank-one margin of the ratio matrix
        """
        report = ctx.orthogonality
        if report.verdict is OrthogonalityVerdict.DEGENERATE:
            return self.not_applicable("Gram matrix has a zero entry")
        return self.result(
            Verdict.of(report.has_witness),
            residual=report.rankone_margin,
            threshold=ctx.tol.rankone_tol,
            witness=report.witness,
            note=report.verdict.value,
        )


class OrthogonalGramCriterion(BaseCriterion):
    """The space is a rescaling of a space whose Gram matrix is an orthogonal matrix."""

    key = "c5_orthogonal_gram"
    intrinsic = True

    def evaluate(self, ctx: ClassificationContext) -> CriterionResult:
        """Evaluate the criterion.

        Args:
            ctx: Classification context

        Returns:
            CriterionResult: Verdict with the orthogonality residual of the rescaled Gram
        """
        report = ctx.orthogonality
        if report.verdict is OrthogonalityVerdict.DEGENERATE:
            return self.not_applicable("Gram matrix has a zero entry")
        if report.witness is None:
            return self.result(Verdict.FALSE, residual=report.residual, threshold=ctx.tol.match_tol)

        try:
            rescaled = rescale_to_orthogonal(ctx.gram, report.witness, ctx.tol)
        except InvalidWitnessError as e:
            return self.result(
                Verdict.FALSE,
                residual=e.details.get("residual"),
                threshold=ctx.tol.match_tol,
            )
        residual = orthogonality_residual(np.asarray(rescaled.entries))
        return self.result(
            Verdict.TRUE,
            residual=residual,
            threshold=ctx.tol.match_tol,
            witness=report.witness,
        )
