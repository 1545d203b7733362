"""Core data models: tolerances, Gram matrices, ball points and Blaschke data."""

from __future__ import annotations

from typing import Any

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

from ..config.settings import get_settings
from ..core.errors import (
    BoundaryPointError,
    DuplicatePointsError,
    InvalidInputError,
    SingularGramError,
)
from .arrays import ComplexArray, ComplexMatrix, ComplexVector


class Tolerances(BaseModel):
    """Numerical tolerances, all relative to the scale of the compared quantities."""

    model_config = ConfigDict(frozen=True)

    psd_tol: float = Field(default=1e-9, ge=0.0, description="Relative eigenvalue floor")
    rankone_tol: float = Field(
        default=1e-8,
        ge=0.0,
        description="Second singular value allowed relative to the first",
    )
    match_tol: float = Field(default=1e-8, ge=0.0, description="Equality tolerance")
    boundary_tol: float = Field(
        default=1e-12,
        ge=0.0,
        description="Minimum distance of points from the unit sphere",
    )


def resolve_tolerances(tol: Tolerances | None) -> Tolerances:
    """Return the given tolerances, or the configured defaults.

    Args:
        tol: Explicit tolerances or None

    Returns:
        Tolerances: Tolerances to use
    """
    return tol if tol is not None else get_settings().tolerances()


def _context_tolerances(info: ValidationInfo) -> Tolerances:
    context = info.context or {}
    tol = context.get("tolerances") if isinstance(context, dict) else None
    return resolve_tolerances(tol)


class GramMatrix(BaseModel):
    """Hermitian positive definite matrix of kernel inner products.

    Entry (i, j) is the inner product of kernel i with kernel j. The stored entries are
    exactly Hermitian; inputs within the match tolerance of Hermitian are symmetrized.
    """

    model_config = ConfigDict(frozen=True)

    entries: ComplexMatrix = Field(..., description="n x n matrix of kernel inner products")

    @field_validator("entries", mode="after")
    @classmethod
    def _validate_entries(cls, entries: ComplexArray, info: ValidationInfo) -> ComplexArray:
        tol = _context_tolerances(info)
        rows, cols = entries.shape
        if rows != cols or rows == 0:
            msg = f"Gram matrix must be square and nonempty, got shape {entries.shape}"
            raise InvalidInputError(msg, "GramMatrix")

        scale = float(np.max(np.abs(entries)))
        asymmetry = float(np.max(np.abs(entries - entries.conj().T)))
        if asymmetry > tol.match_tol * scale:
            msg = f"Gram matrix is not Hermitian (deviation {asymmetry:.3e})"
            raise InvalidInputError(msg, "GramMatrix", {"deviation": asymmetry})

        hermitian = (entries + entries.conj().T) / 2
        np.fill_diagonal(hermitian, hermitian.diagonal().real)
        if np.any(hermitian.diagonal().real <= 0):
            msg = "Gram matrix diagonal must be strictly positive"
            raise SingularGramError(msg, "GramMatrix")

        eigenvalues = np.linalg.eigvalsh(hermitian)
        if eigenvalues[0] <= tol.psd_tol * eigenvalues[-1]:
            msg = (
                f"Gram matrix is not positive definite "
                f"(eigenvalues {eigenvalues[0]:.3e} .. {eigenvalues[-1]:.3e})"
            )
            raise SingularGramError(
                msg,
                "GramMatrix",
                {"min_eigenvalue": float(eigenvalues[0]), "max_eigenvalue": float(eigenvalues[-1])},
            )

        hermitian.setflags(write=False)
        return hermitian

    @classmethod
    def from_array(cls, entries: ArrayLike, tol: Tolerances | None = None) -> GramMatrix:
        """Validate an array as a Gram matrix under the given tolerances.

        Args:
            entries: Square complex array
            tol: Tolerances for the Hermitian and definiteness checks

        Returns:
            GramMatrix: Validated Gram matrix
        """
        return cls.model_validate({"entries": entries}, context={"tolerances": tol})

    @property
    def n(self) -> int:
        """Return the number of kernels."""
        return int(self.entries.shape[0])

    @property
    def norm(self) -> float:
        """Return the spectral norm (largest eigenvalue)."""
        return float(np.linalg.eigvalsh(self.entries)[-1])


class RescalingWitness(BaseModel):
    """Nonzero scalars with g_ij = lambda_i conj(lambda_j) h_ij."""

    model_config = ConfigDict(frozen=True)

    lambdas: ComplexVector = Field(..., description="Nonzero rescaling factors")

    @field_validator("lambdas", mode="after")
    @classmethod
    def _validate_lambdas(cls, lambdas: ComplexArray) -> ComplexArray:
        if lambdas.size == 0 or np.any(np.abs(lambdas) == 0):
            msg = "rescaling factors must be nonempty and nonzero"
            raise InvalidInputError(msg, "RescalingWitness")
        return lambdas

    @property
    def n(self) -> int:
        """Return the number of factors."""
        return int(self.lambdas.shape[0])

    def outer(self) -> ComplexArray:
        """Return the matrix lambda_i conj(lambda_j)."""
        return np.outer(self.lambdas, self.lambdas.conj())


def _check_inside_ball(coords: ComplexArray, tol: Tolerances, operation: str) -> None:
    norms = np.linalg.norm(coords, axis=-1)
    if np.any(norms >= 1 - tol.boundary_tol):
        msg = f"point norm {float(np.max(norms)):.15g} is not strictly inside the unit ball"
        raise BoundaryPointError(msg, operation, {"max_norm": float(np.max(norms))})


class BallPoint(BaseModel):
    """A point of the open unit ball in C^m."""

    model_config = ConfigDict(frozen=True)

    coords: ComplexVector = Field(..., description="Complex coordinates, Euclidean norm < 1")

    @field_validator("coords", mode="after")
    @classmethod
    def _validate_coords(cls, coords: ComplexArray, info: ValidationInfo) -> ComplexArray:
        if coords.size == 0:
            msg = "ball point needs at least one coordinate"
            raise InvalidInputError(msg, "BallPoint")
        _check_inside_ball(coords, _context_tolerances(info), "BallPoint")
        return coords

    @classmethod
    def from_array(cls, coords: ArrayLike, tol: Tolerances | None = None) -> BallPoint:
        """Validate coordinates as a ball point.

        Args:
            coords: Complex coordinate vector
            tol: Tolerances for the boundary check

        Returns:
            BallPoint: Validated point
        """
        return cls.model_validate({"coords": coords}, context={"tolerances": tol})

    @property
    def m(self) -> int:
        """Return the ambient dimension."""
        return int(self.coords.shape[0])


class PointSet(BaseModel):
    """Finite list of distinct points of the unit ball in C^m, one point per row."""

    model_config = ConfigDict(frozen=True)

    coords: ComplexMatrix = Field(..., description="n x m matrix, one point per row")

    @field_validator("coords", mode="after")
    @classmethod
    def _validate_coords(cls, coords: ComplexArray, info: ValidationInfo) -> ComplexArray:
        n, m = coords.shape
        if n == 0 or m == 0:
            msg = f"point set must be nonempty, got shape {coords.shape}"
            raise InvalidInputError(msg, "PointSet")
        _check_inside_ball(coords, _context_tolerances(info), "PointSet")
        for i in range(n):
            for j in range(i + 1, n):
                if np.array_equal(coords[i], coords[j]):
                    msg = f"points {i} and {j} coincide"
                    raise DuplicatePointsError(msg, "PointSet", {"pair": [i, j]})
        return coords

    @classmethod
    def from_array(cls, coords: ArrayLike, tol: Tolerances | None = None) -> PointSet:
        """Validate an n x m array as a point set.

        Args:
            coords: Complex array, one point per row
            tol: Tolerances for the boundary check

        Returns:
            PointSet: Validated point set
        """
        return cls.model_validate({"coords": coords}, context={"tolerances": tol})

    @property
    def n(self) -> int:
        """Return the number of points."""
        return int(self.coords.shape[0])

    @property
    def m(self) -> int:
        """Return the ambient dimension."""
        return int(self.coords.shape[1])

    @property
    def points(self) -> tuple[BallPoint, ...]:
        """Return the points as ball points."""
        return tuple(BallPoint.model_construct(coords=row) for row in self.coords)

    def subset(self, idx: list[int]) -> PointSet:
        """Return the points at the given indices, in order."""
        return PointSet.model_construct(coords=self.coords[idx])


class BallAutomorphism(BaseModel):
    """Automorphism z -> U phi_a(z) of the unit ball."""

    model_config = ConfigDict(frozen=True)

    center: BallPoint = Field(..., description="Point sent to the origin")
    unitary: ComplexMatrix = Field(..., description="Unitary applied after the Mobius part")

    @field_validator("unitary", mode="after")
    @classmethod
    def _validate_unitary(cls, unitary: ComplexArray, info: ValidationInfo) -> ComplexArray:
        tol = _context_tolerances(info)
        rows, cols = unitary.shape
        if rows != cols:
            msg = f"unitary must be square, got shape {unitary.shape}"
            raise InvalidInputError(msg, "BallAutomorphism")
        defect = float(np.max(np.abs(unitary @ unitary.conj().T - np.eye(rows))))
        if defect > max(tol.match_tol, 1e-12):
            msg = f"matrix is not unitary (defect {defect:.3e})"
            raise InvalidInputError(msg, "BallAutomorphism", {"defect": defect})
        return unitary

    def model_post_init(self, context: Any, /) -> None:
        """Check that the center and the unitary share the ambient dimension."""
        if self.unitary.shape[0] != self.center.m:
            msg = (
                f"center has dimension {self.center.m} but unitary has size "
                f"{self.unitary.shape[0]}"
            )
            raise InvalidInputError(msg, "BallAutomorphism")

    @property
    def m(self) -> int:
        """Return the ambient dimension."""
        return self.center.m


class BlaschkeData(BaseModel):
    """Distinct simple zeros in the open unit disk of a finite Blaschke product."""

    model_config = ConfigDict(frozen=True)

    zeros: ComplexVector = Field(..., description="Simple zeros, |x_i| < 1")

    @field_validator("zeros", mode="after")
    @classmethod
    def _validate_zeros(cls, zeros: ComplexArray, info: ValidationInfo) -> ComplexArray:
        if zeros.size == 0:
            msg = "a Blaschke product needs at least one zero"
            raise InvalidInputError(msg, "BlaschkeData")
        _check_inside_ball(zeros[:, None], _context_tolerances(info), "BlaschkeData")
        if np.unique(zeros).size != zeros.size:
            msg = "Blaschke zeros must be simple"
            raise DuplicatePointsError(msg, "BlaschkeData")
        return zeros

    @classmethod
    def from_array(cls, zeros: ArrayLike, tol: Tolerances | None = None) -> BlaschkeData:
        """Validate a vector of zeros.

        Args:
            zeros: Complex zeros in the unit disk
            tol: Tolerances for the boundary check

        Returns:
            BlaschkeData: Validated zero set
        """
        return cls.model_validate({"zeros": zeros}, context={"tolerances": tol})

    @property
    def n(self) -> int:
        """Return the number of zeros."""
        return int(self.zeros.shape[0])


class MultiplierValues(BaseModel):
    """Values m(x_i) of a multiplier on the index set."""

    model_config = ConfigDict(frozen=True)

    values: ComplexVector = Field(..., description="Multiplier values, one per kernel")

    @classmethod
    def from_array(cls, values: ArrayLike) -> MultiplierValues:
        """Wrap a vector of values.

        Args:
            values: Complex values

        Returns:
            MultiplierValues: Multiplier values
        """
        return cls.model_validate({"values": values})

    @property
    def n(self) -> int:
        """Return the number of values."""
        return int(self.values.shape[0])
