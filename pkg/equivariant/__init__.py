from equivariant.localisation import fixed_point_sum, localisation_oracle, residue_side
from equivariant.multidegree import (
    MonomialIdeal,
    WeightAssignment,
    mdeg_complete_intersection,
    mdeg_monomial,
    weight_degree_report,
)

__all__ = [
    "MonomialIdeal",
    "WeightAssignment",
    "fixed_point_sum",
    "localisation_oracle",
    "mdeg_complete_intersection",
    "mdeg_monomial",
    "residue_side",
    "weight_degree_report",
]
