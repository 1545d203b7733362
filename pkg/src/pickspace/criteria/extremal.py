"""Criterion comparing extremal multiplier values with products of deltas."""

from ..core.criterion import BaseCriterion, ClassificationContext
from ..core.multipliers import delta_product, extremal_vanishing_multiplier
from ..models.reports import CriterionResult, ExtremalBaseCheck, Verdict
from ..utils.logging import setup_logging

logger = setup_logging(__name__)


class ExtremalProductCriterion(BaseCriterion):
    """For some base x, the extremal value vanishing on the rest equals the product of deltas.

    Every index is tried as the base; the per-base comparisons are attached.
    """

    key = "c3_extremal_product"
    intrinsic = True

    def evaluate(self, ctx: ClassificationContext) -> CriterionResult:
        """Evaluate the criterion.

        Args:
            ctx: Classification context

        Returns:
            CriterionResult: Verdict with the smallest relative gap over all bases
        """
        checks: list[ExtremalBaseCheck] = []
        gaps: list[float] = []
        for x in range(ctx.n):
            others = [j for j in range(ctx.n) if j != x]
            value = extremal_vanishing_multiplier(ctx.gram, x, others, ctx.tol).value
            product = delta_product(ctx.gram, x)
            gap = abs(value - product) / max(1.0, value)
            gaps.append(gap)
            checks.append(
                ExtremalBaseCheck(
                    base=x,
                    extremal_value=value,
                    delta_product=product,
                    holds=gap <= ctx.tol.match_tol,
                )
            )
            if value < product - ctx.tol.match_tol:
                logger.warning(f"extremal value {value:.12g} below delta product {product:.12g}")

        return self.result(
            Verdict.of(any(c.holds for c in checks)),
            residual=min(gaps),
            threshold=ctx.tol.match_tol,
            per_base=checks,
        )
