"""Result models returned by the numerical core and printed by the command line."""

from __future__ import annotations

from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .arrays import ComplexArray, ComplexMatrix, ComplexVector
from .models import GramMatrix, MultiplierValues, PointSet, RescalingWitness


class GeodesicMembership(BaseModel):
    """Outcome of the single complex geodesic test."""

    model_config = ConfigDict(frozen=True)

    in_geodesic: bool = Field(..., description="Whether the set lies in one complex geodesic")
    direction: ComplexVector | None = Field(
        default=None,
        description="Unit direction of the geodesic through the origin after moving x_1 there",
    )
    margin: float = Field(
        ...,
        description="Second over first singular value of the translated images",
    )


class PickRealization(BaseModel):
    """Points in a ball whose Drury-Arveson Gram rescales to a given Gram."""

    model_config = ConfigDict(frozen=True)

    points: PointSet
    witness: RescalingWitness
    rank: int = Field(..., ge=0, description="Numerical rank of the normalized kernel matrix")
    residual: float = Field(..., description="Max deviation of the rescaled round trip")


class ExtremalSolution(BaseModel):
    """Extremal multiplier vanishing on a zero set.

    Values and coordinates are given on ``support``, the sorted union of the zero set and
    the distinguished index.
    """

    model_config = ConfigDict(frozen=True)

    index: int = Field(..., description="Distinguished index x")
    zero_set: list[int] = Field(..., description="Indices where the multiplier vanishes")
    support: list[int] = Field(..., description="Indices of the regular subspace used")
    value: float = Field(..., ge=0.0, description="Extremal value m(Y, x)(x)")
    multiplier: MultiplierValues
    h: ComplexVector = Field(..., description="Coordinates of the extremal unit vector")


class ExtremalReformulations(BaseModel):
    """Independent evaluations of the extremal value with every other index as zero set."""

    model_config = ConfigDict(frozen=True)

    index: int
    closed_form: float = Field(..., description="(|k_x| |k_x^#|)^-1")
    idempotent_reciprocal: float = Field(..., description="1 / norm of the idempotent at x")
    oracle: float = Field(..., description="Bisection estimate")
    delta_product: float = Field(..., description="Product of delta(x, j) over j != x")

    @property
    def excess(self) -> float:
        """Return how far the extremal value exceeds the product of deltas."""
        return self.closed_form - self.delta_product


class OrthogonalityVerdict(str, Enum):
    """Outcome of the r-orthogonality test."""

    ORTHOGONAL = "orthogonal"
    R_ORTHOGONAL = "r_orthogonal"
    NOT_R_ORTHOGONAL = "not_r_orthogonal"
    DEGENERATE = "degenerate"


class OrthogonalityReport(BaseModel):
    """Verdict of the r-orthogonality test with its rescaling witness."""

    model_config = ConfigDict(frozen=True)

    verdict: OrthogonalityVerdict
    witness: RescalingWitness | None = None
    residual: float | None = Field(
        default=None,
        description="Max deviation of the rescaled Gram from an orthogonal matrix",
    )
    rankone_margin: float | None = Field(
        default=None,
        description="Second over first eigenvalue magnitude of the ratio matrix",
    )

    @property
    def has_witness(self) -> bool:
        """Return True when the verdict carries a usable rescaling witness."""
        return self.witness is not None and self.verdict in (
            OrthogonalityVerdict.ORTHOGONAL,
            OrthogonalityVerdict.R_ORTHOGONAL,
        )


class ConjugationOperator(BaseModel):
    """Conjugate-linear map J on span{k_i} in coordinates.

    A vector with coordinates ``a`` in the kernel basis is sent to ``matrix @ conj(a)``.
    Inner products of coordinate vectors are ``a^T G conj(b)``.
    """

    model_config = ConfigDict(frozen=True)

    gram: GramMatrix
    matrix: ComplexMatrix

    def apply(self, coords: ComplexArray) -> ComplexArray:
        """Apply J to coordinate vectors (last axis indexes kernels)."""
        return np.asarray(np.conj(coords) @ self.matrix.T, dtype=np.complex128)

    def pairing(self) -> ComplexArray:
        """Return the matrix of inner products <k_i, J k_j>."""
        return np.asarray(self.gram.entries @ self.matrix.conj(), dtype=np.complex128)

    def involution_defect(self) -> float:
        """Return max |C conj(C) - I|."""
        n = self.matrix.shape[0]
        return float(np.max(np.abs(self.matrix @ self.matrix.conj() - np.eye(n))))

    def isometry_defect(self) -> float:
        """Return max |C^T G conj(C) - G^T|, relative to the Gram scale."""
        g = self.gram.entries
        lhs = self.matrix.T @ g @ self.matrix.conj()
        return float(np.max(np.abs(lhs - g.T)) / np.max(np.abs(g)))

    def is_involution(self, tol: float) -> bool:
        """Return True if J composed with itself is the identity within tol."""
        return self.involution_defect() <= tol

    def is_isometric(self, tol: float) -> bool:
        """Return True if J preserves norms within tol."""
        return self.isometry_defect() <= tol


class Verdict(str, Enum):
    """Verdict of a single criterion."""

    TRUE = "true"
    FALSE = "false"
    NOT_APPLICABLE = "not_applicable"

    @classmethod
    def of(cls, value: bool) -> Verdict:
        """Convert a boolean into a verdict."""
        return cls.TRUE if value else cls.FALSE


class ExtremalBaseCheck(BaseModel):
    """Extremal value against the product of deltas with one index as base."""

    model_config = ConfigDict(frozen=True)

    base: int
    extremal_value: float
    delta_product: float
    holds: bool

    @property
    def excess(self) -> float:
        """Return extremal value minus product of deltas."""
        return self.extremal_value - self.delta_product


class CriterionResult(BaseModel):
    """Verdict of one equivalent condition, with the evidence it was decided on."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Criterion identifier, e.g. c1_geodesic")
    verdict: Verdict
    residual: float | None = Field(
        default=None,
        description="Quantity compared against a tolerance to reach the verdict",
    )
    threshold: float | None = Field(
        default=None,
        description="Tolerance the residual met or missed",
    )
    borderline: bool = Field(
        default=False,
        description="Residual within a factor of ten of its threshold",
    )
    direction: ComplexVector | None = None
    witness: RescalingWitness | None = None
    per_base: list[ExtremalBaseCheck] | None = None
    note: str | None = None

    @property
    def applicable(self) -> bool:
        """Return True unless the verdict is not_applicable."""
        return self.verdict is not Verdict.NOT_APPLICABLE


class ClassificationReport(BaseModel):
    """Verdicts of the six equivalent conditions for membership in the model class."""

    model_config = ConfigDict(frozen=True)

    n: int
    m: int | None = Field(default=None, description="Ambient dimension of the point set used")
    c1_geodesic: CriterionResult
    c2_triples: CriterionResult
    c3_extremal_product: CriterionResult
    c4_r_orthogonal: CriterionResult
    c5_orthogonal_gram: CriterionResult
    c6_model: CriterionResult
    consistent: bool
    is_model_space: bool
    direct_checks: list[CriterionResult] | None = Field(
        default=None,
        description="Conditions (3) to (5) evaluated on the input Gram itself",
    )
    direct_agrees: bool | None = None

    @property
    def criteria(self) -> tuple[CriterionResult, ...]:
        """Return the six criterion results in order."""
        return (
            self.c1_geodesic,
            self.c2_triples,
            self.c3_extremal_product,
            self.c4_r_orthogonal,
            self.c5_orthogonal_gram,
            self.c6_model,
        )

    @property
    def borderline(self) -> bool:
        """Return True if any criterion was decided near its threshold."""
        return any(c.borderline for c in self.criteria)


class DualMembership(BaseModel):
    """Membership of the dual space in F and in the model class."""

    model_config = ConfigDict(frozen=True)

    dual_in_f: bool
    dual_in_m: bool
    dual_degenerate: bool = Field(..., description="Dual Gram has a zero entry")
    dual_gram: GramMatrix
    dual_classification: ClassificationReport | None = None


class DeltaReport(BaseModel):
    """Matrix of pairwise delta distances."""

    model_config = ConfigDict(frozen=True)

    n: int
    delta: list[list[float]]


class OrthogonalizeReport(BaseModel):
    """r-orthogonality verdict with the orthogonal rescaled Gram matrix when one exists."""

    model_config = ConfigDict(frozen=True)

    report: OrthogonalityReport
    rescaled: GramMatrix | None = None


class ExtremalReport(BaseModel):
    """Extremal multiplier at a base index with its independent evaluations."""

    model_config = ConfigDict(frozen=True)

    solution: ExtremalSolution
    reformulations: ExtremalReformulations


class CongruenceReport(BaseModel):
    """Whether two point sets are congruent, with the matching that shows it."""

    model_config = ConfigDict(frozen=True)

    congruent: bool
    permutation: list[int] | None = Field(
        default=None,
        description="Index of the point of the second set matched to each point of the first",
    )
    witness: RescalingWitness | None = None
