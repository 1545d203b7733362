"""Input documents read by the command line: point sets, Gram matrices and zero sets."""

from __future__ import annotations

from enum import Enum
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.errors import InvalidInputError
from .arrays import ComplexMatrix, ComplexVector
from .models import BlaschkeData, GramMatrix, PointSet, Tolerances


class DocumentKind(str, Enum):
    """Kinds of input documents."""

    POINTS = "points"
    GRAM = "gram"
    BLASCHKE = "blaschke"


class ToleranceOverrides(BaseModel):
    """Optional per-document tolerance overrides."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    psd_tol: float | None = Field(default=None, ge=0.0)
    rankone_tol: float | None = Field(default=None, ge=0.0)
    match_tol: float | None = Field(default=None, ge=0.0)
    boundary_tol: float | None = Field(default=None, ge=0.0)

    def apply(self, base: Tolerances) -> Tolerances:
        """Return base with the overrides that are set.

        Args:
            base: Tolerances to start from

        Returns:
            Tolerances: Merged tolerances
        """
        return base.model_copy(update=self.model_dump(exclude_none=True))


class PointsPayload(BaseModel):
    """Points of the unit ball in C^m, one per row."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["points"] = "points"
    m: int | None = Field(default=None, ge=1, description="Ambient dimension")
    points: ComplexMatrix
    tolerances: ToleranceOverrides | None = None

    @model_validator(mode="after")
    def _check_dimension(self) -> PointsPayload:
        if self.m is not None and self.points.shape[1] != self.m:
            msg = f"m = {self.m} but points have {self.points.shape[1]} coordinates"
            raise InvalidInputError(msg, "points document")
        return self

    def to_point_set(self, tol: Tolerances | None = None) -> PointSet:
        """Validate the points as a point set."""
        return PointSet.from_array(self.points, tol)

    @classmethod
    def from_point_set(cls, ps: PointSet) -> PointsPayload:
        """Wrap a point set as a document."""
        return cls(m=ps.m, points=ps.coords)


class GramPayload(BaseModel):
    """Gram matrix of kernel inner products."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["gram"] = "gram"
    n: int | None = Field(default=None, ge=1, description="Number of kernels")
    entries: ComplexMatrix
    tolerances: ToleranceOverrides | None = None

    @model_validator(mode="after")
    def _check_size(self) -> GramPayload:
        if self.n is not None and self.entries.shape != (self.n, self.n):
            msg = f"n = {self.n} but entries have shape {self.entries.shape}"
            raise InvalidInputError(msg, "gram document")
        return self

    def to_gram(self, tol: Tolerances | None = None) -> GramMatrix:
        """Validate the entries as a Gram matrix."""
        return GramMatrix.from_array(self.entries, tol)

    @classmethod
    def from_gram(cls, g: GramMatrix) -> GramPayload:
        """Wrap a Gram matrix as a document."""
        return cls(n=g.n, entries=g.entries)


class BlaschkePayload(BaseModel):
    """Simple zeros of a finite Blaschke product."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["blaschke"] = "blaschke"
    zeros: ComplexVector
    tolerances: ToleranceOverrides | None = None

    def to_blaschke(self, tol: Tolerances | None = None) -> BlaschkeData:
        """Validate the zeros."""
        return BlaschkeData.from_array(self.zeros, tol)

    def to_point_set(self, tol: Tolerances | None = None) -> PointSet:
        """Return the zeros as points of the disk."""
        return PointSet.from_array(np.asarray(self.zeros).reshape(-1, 1), tol)


Payload = PointsPayload | GramPayload | BlaschkePayload


class InputDocument(BaseModel):
    """A parsed input document with its source name."""

    model_config = ConfigDict(frozen=True)

    source: str = Field(default="<stdin>", description="File the document was read from")
    payload: Payload = Field(..., discriminator="kind")

    @property
    def kind(self) -> DocumentKind:
        """Return the document kind."""
        return DocumentKind(self.payload.kind)

    @property
    def tolerances(self) -> ToleranceOverrides | None:
        """Return the tolerance overrides of the document."""
        return self.payload.tolerances

    def point_set(self, tol: Tolerances | None = None) -> PointSet:
        """Return the points of a points or blaschke document.

        Raises:
            InvalidInputError: If the document holds a Gram matrix
        """
        if isinstance(self.payload, GramPayload):
            msg = "this command needs points, got a gram document"
            raise InvalidInputError(msg, self.source)
        return self.payload.to_point_set(tol)

    def blaschke(self, tol: Tolerances | None = None) -> BlaschkeData:
        """Return the zeros of a blaschke document, or of a points document in the disk.

        Raises:
            InvalidInputError: If the document cannot be read as zeros
        """
        if isinstance(self.payload, BlaschkePayload):
            return self.payload.to_blaschke(tol)
        if isinstance(self.payload, PointsPayload) and self.payload.points.shape[1] == 1:
            return BlaschkeData.from_array(self.payload.points[:, 0], tol)
        msg = f"this command needs zeros in the disk, got a {self.kind.value} document"
        raise InvalidInputError(msg, self.source)

