"""Criterion reconstructing a model space from points on a complex geodesic."""

import numpy as np

from ..core.criterion import BaseCriterion, ClassificationContext
from ..core.gram import are_rescalings
from ..core.hyperbolic import disk_coordinates
from ..core.pick import model_gram
from ..models.models import BlaschkeData
from ..models.reports import CriterionResult, Verdict


class ModelCriterion(BaseCriterion):
    """The space is a rescaling of a model space K_B.

    The geodesic is moved onto a disk through the origin and the Gram matrix is compared
    with the model Gram of the resulting zeros. Sets outside a single geodesic are
    reported false without reconstruction.
    """

    key = "c6_model"

    def evaluate(self, ctx: ClassificationContext) -> CriterionResult:
        """Evaluate the criterion.

        Args:
            ctx: Classification context

        Returns:
            CriterionResult: Verdict with the relative rescaling residual and witness
        """
        if ctx.points is None:
            return self.not_applicable("no point set")
        if not ctx.geodesic.in_geodesic:
            return self.result(Verdict.FALSE, note="points do not lie in one complex geodesic")

        zeros = BlaschkeData.from_array(disk_coordinates(ctx.points, ctx.tol), ctx.tol)
        model = model_gram(zeros, ctx.tol)
        witness = are_rescalings(ctx.gram, model, ctx.tol)
        if witness is None:
            return self.result(Verdict.FALSE, note="not a rescaling of the reconstructed model")

        rebuilt = witness.outer() * model.entries
        residual = float(np.max(np.abs(rebuilt - ctx.gram.entries)) / ctx.gram.norm)
        return self.result(
            Verdict.TRUE,
            residual=residual,
            threshold=ctx.tol.match_tol,
            witness=witness,
        )
