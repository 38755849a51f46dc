from jets.curves import CurveFlag, CurveJet, curve_flag_data, is_test_curve, maximal_minors
from jets.jet import Jet, compose_jets
from jets.reparam import Reparam, compose_reparams, reparam_matrix

__all__ = [
    "CurveFlag",
    "CurveJet",
    "Jet",
    "Reparam",
    "compose_jets",
    "compose_reparams",
    "curve_flag_data",
    "is_test_curve",
    "maximal_minors",
    "reparam_matrix",
]
