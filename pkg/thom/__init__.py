from thom.conjecture import predecessors, scan_conjecture, tp3_report
from thom.polynomial import (
    table1_coeff_identity,
    thom_from_window,
    thom_polynomial,
    verify_table1,
)
from thom.qpoly import QPoly, builtin_q, load_q_file
from thom.series import TpWindowTable, tp3_factorized, tp_box, tp_window

__all__ = [
    "QPoly",
    "TpWindowTable",
    "builtin_q",
    "load_q_file",
    "predecessors",
    "scan_conjecture",
    "table1_coeff_identity",
    "thom_from_window",
    "thom_polynomial",
    "tp3_factorized",
    "tp3_report",
    "tp_box",
    "tp_window",
    "verify_table1",
]
