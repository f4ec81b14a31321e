"""Weight diagrams, DS cohomology, duals and forest formulas for Gl(n|n)."""

from .ds import GradedDecomposition, Summand, core_and_multiplicity, ds, ds_iter, modified_sdim, typical_sdim
from .duality import dual_plot, dual_spaced_forest, dual_weight
from .errors import DomainError, GlnnError, InvalidWeightError, ParseError, UnsupportedContextError
from .forests import SpacedForest, from_spaced_forest, omega, to_spaced_forest
from .laurent import LaurentPolynomial
from .plots import Plot
from .weights import Weight, WeightDiagram, basic_weight, cup_diagram, epsilon, phi, to_plot, weight_diagram

__all__ = [
    "DomainError",
    "GlnnError",
    "GradedDecomposition",
    "InvalidWeightError",
    "LaurentPolynomial",
    "ParseError",
    "Plot",
    "SpacedForest",
    "Summand",
    "UnsupportedContextError",
    "Weight",
    "WeightDiagram",
    "basic_weight",
    "core_and_multiplicity",
    "cup_diagram",
    "ds",
    "ds_iter",
    "dual_plot",
    "dual_spaced_forest",
    "dual_weight",
    "epsilon",
    "from_spaced_forest",
    "modified_sdim",
    "omega",
    "phi",
    "to_plot",
    "to_spaced_forest",
    "typical_sdim",
    "weight_diagram",
]
