"""Criteria package for the equivalent model space conditions."""

from ..core.criterion import CriterionRegistry
from .extremal import ExtremalProductCriterion
from .geodesic import GeodesicCriterion, TriplesCriterion
from .model import ModelCriterion
from .orthogonality import OrthogonalGramCriterion, ROrthogonalCriterion

# Create and populate the registry
registry = CriterionRegistry()

# Register criteria in report order
registry.register(GeodesicCriterion())
registry.register(TriplesCriterion())
registry.register(ExtremalProductCriterion())
registry.register(ROrthogonalCriterion())
registry.register(OrthogonalGramCriterion())
registry.register(ModelCriterion())
