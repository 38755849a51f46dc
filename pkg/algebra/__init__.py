from algebra.laurent import LaurentSeries, LinearForm, expand_inverse_linear
from algebra.polynomial import GradedPolynomial
from algebra.rational import format_rational, parse_rational
from algebra.residue import iterated_residue, laurent_coefficients
from algebra.series import series_inverse
from algebra.symbols import GradedSymbol, SymbolContext
from algebra.vanishing import vanishing_predicates

__all__ = [
    "GradedPolynomial",
    "GradedSymbol",
    "LaurentSeries",
    "LinearForm",
    "SymbolContext",
    "expand_inverse_linear",
    "format_rational",
    "iterated_residue",
    "laurent_coefficients",
    "parse_rational",
    "series_inverse",
    "vanishing_predicates",
]
