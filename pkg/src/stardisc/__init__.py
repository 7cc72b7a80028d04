"""Star-discrepancy of explicit point sets, Weil-type exponential sums and CUD tests."""
from .discrepancy import (
    AnchoredBox,
    DiscrepancyResult,
    ProductWeights,
    WeightedResult,
    inverse_discrepancy_search,
    local_discrepancy,
    project,
    star_discrepancy,
    star_discrepancy_1d,
    star_discrepancy_exact,
    star_discrepancy_lower,
    weighted_star_discrepancy,
)
from .generators import GeneratorSpec, generate, generate_pset, generate_reference, vdc_value
from .pointset import PointSet, read_pointset, write_pointset

__version__ = "0.1.0"

__all__ = [
    "AnchoredBox",
    "DiscrepancyResult",
    "GeneratorSpec",
    "PointSet",
    "ProductWeights",
    "WeightedResult",
    "generate",
    "generate_pset",
    "generate_reference",
    "inverse_discrepancy_search",
    "local_discrepancy",
    "project",
    "read_pointset",
    "star_discrepancy",
    "star_discrepancy_1d",
    "star_discrepancy_exact",
    "star_discrepancy_lower",
    "vdc_value",
    "weighted_star_discrepancy",
    "write_pointset",
]
