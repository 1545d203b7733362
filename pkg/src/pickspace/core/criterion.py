"""Criterion interface, base class and registry for the equivalent model space conditions."""

import abc
from functools import cached_property
from typing import Any, ClassVar, Protocol

from ..models.models import GramMatrix, PointSet, Tolerances, resolve_tolerances
from ..models.reports import CriterionResult, GeodesicMembership, OrthogonalityReport, Verdict
from .errors import InvalidInputError
from .hyperbolic import in_single_geodesic
from .orthogonality import r_orthogonality_witness

BORDERLINE_FACTOR = 10.0


class ClassificationContext:
    """Inputs of one classification and the quantities several criteria share.

    A context built from a Gram matrix alone has no points; only intrinsic criteria
    can be evaluated on it.
    """

    def __init__(
        self,
        gram: GramMatrix,
        tol: Tolerances | None = None,
        points: PointSet | None = None,
    ) -> None:
        """Initialize the context.

        Args:
            gram: Gram matrix of the space
            tol: Tolerances
            points: Points whose Drury-Arveson Gram is gram, when known
        """
        self.gram = gram
        self.tol = resolve_tolerances(tol)
        self.points = points

    @property
    def n(self) -> int:
        """Return the number of kernels."""
        return self.gram.n

    @cached_property
    def geodesic(self) -> GeodesicMembership:
        """Return the single geodesic test of the points."""
        if self.points is None:
            msg = "geodesic test needs a point set"
            raise InvalidInputError(msg, "classify")
        return in_single_geodesic(self.points, self.tol)

    @cached_property
    def orthogonality(self) -> OrthogonalityReport:
        """Return the r-orthogonality report of the Gram matrix."""
        return r_orthogonality_witness(self.gram, self.tol)


class Criterion(Protocol):
    """Protocol defining the interface of a classification criterion."""

    @property
    def key(self) -> str:
        """Return the report field this criterion fills."""
        ...

    @property
    def intrinsic(self) -> bool:
        """Return True if the criterion only needs the Gram matrix."""
        ...

    def evaluate(self, ctx: ClassificationContext) -> CriterionResult:
        """Evaluate the criterion.

        Args:
            ctx: Classification context

        Returns:
            CriterionResult: Verdict with evidence
        """
        ...


class BaseCriterion(abc.ABC):
    """Base abstract class for classification criteria."""

    key: ClassVar[str]
    intrinsic: ClassVar[bool] = False

    @property
    def name(self) -> str:
        """Return the name of the criterion class."""
        return self.__class__.__name__

    def result(
        self,
        verdict: Verdict,
        residual: float | None = None,
        threshold: float | None = None,
        **evidence: Any,
    ) -> CriterionResult:
        """Build a result, flagging residuals within a factor of ten of the threshold.

        Args:
            verdict: Verdict reached
            residual: Quantity the verdict was decided on
            threshold: Tolerance the residual was compared with
            **evidence: Further CriterionResult fields

        Returns:
            CriterionResult: Result for this criterion
        """
        borderline = (
            residual is not None
            and threshold is not None
            and threshold > 0
            and threshold / BORDERLINE_FACTOR <= residual <= threshold * BORDERLINE_FACTOR
        )
        return CriterionResult(
            name=self.key,
            verdict=verdict,
            residual=residual,
            threshold=threshold,
            borderline=borderline,
            **evidence,
        )

    def not_applicable(self, note: str) -> CriterionResult:
        """Build a not_applicable result with an explanation."""
        return CriterionResult(name=self.key, verdict=Verdict.NOT_APPLICABLE, note=note)

    @abc.abstractmethod
    def evaluate(self, ctx: ClassificationContext) -> CriterionResult:
        """Evaluate the criterion.

        Args:
            ctx: Classification context

        Returns:
            CriterionResult: Verdict with evidence
        """


class CriterionRegistry:
    """Registry for classification criteria, kept in registration order."""

    def __init__(self) -> None:
        """Initialize an empty registry."""
        self._criteria: dict[str, Criterion] = {}

    def register(self, criterion: Criterion) -> None:
        """Register a criterion.

        Args:
            criterion: The criterion to register.
        """
        self._criteria[criterion.key] = criterion

    def get_criterion(self, key: str) -> Criterion | None:
        """Get a criterion by key.

        Args:
            key: Report field of the criterion.

        Returns:
            Criterion | None: The criterion, or None if not found.
        """
        return self._criteria.get(key)

    def get_all_criteria(self) -> list[Criterion]:
        """Get all registered criteria.

        Returns:
            list[Criterion]: Criteria in registration order.
        """
        return list(self._criteria.values())

    def get_intrinsic_criteria(self) -> list[Criterion]:
        """Get the criteria that can be evaluated on a Gram matrix alone.

        Returns:
            list[Criterion]: Intrinsic criteria in registration order.
        """
        return [c for c in self._criteria.values() if c.intrinsic]

    def get_keys(self) -> list[str]:
        """Get keys of all registered criteria.

        Returns:
            list[str]: Criterion keys.
        """
        return list(self._criteria.keys())
