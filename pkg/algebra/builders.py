"""Ring elements and linear forms shared by the Thom, localisation and intersection pipelines."""

from typing import List, Tuple

from algebra.laurent import LaurentSeries, LinearForm, combined_ring, unit_vector
from algebra.symbols import SymbolContext


def z_gens(k: int, context: SymbolContext):
    return combined_ring(k, context).gens[:k]


def vandermonde(k: int, context: SymbolContext):
    """prod_{m<l} (z_m - z_l) in the combined ring."""
    z = z_gens(k, context)
    result = combined_ring(k, context).one
    for m in range(k):
        for l in range(m + 1, k):
            result *= z[m] - z[l]
    return result


def z_sum(k: int, context: SymbolContext):
    ring = combined_ring(k, context)
    return sum(z_gens(k, context), ring.zero)


def morin_triples(k: int) -> List[Tuple[int, int, int]]:
    """(m, r, l), 1-based, with m <= r and m + r <= l <= k."""
    return [
        (m, r, l)
        for l in range(2, k + 1)
        for m in range(1, l)
        for r in range(m, l)
        if m + r <= l
    ]


def morin_factors(k: int, context: SymbolContext) -> List[LinearForm]:
    """The denominator forms z_m + z_r - z_l."""
    forms = []
    for m, r, l in morin_triples(k):
        coeffs = [0] * k
        coeffs[m - 1] += 1
        coeffs[r - 1] += 1
        coeffs[l - 1] -= 1
        forms.append(LinearForm.of(context, coeffs))
    return forms


def morin_factor_count(k: int) -> int:
    return len(morin_triples(k))


def chern_tail(k: int, var: int, context: SymbolContext, shift: int, prefix: str = "c") -> LaurentSeries:
    """
    c(1/z_var) * z_var^shift = sum_j c_j z_var^(shift - j) over the Chern symbols of
    ``context`` (0-based ``var``).
    """
    width = context.size
    terms = {unit_vector(k, var, shift) + (0,) * width: 1}
    for pos, symbol in enumerate(context.symbols):
        if not symbol.name.startswith(f"{prefix}_"):
            continue
        j = int(symbol.name.split("_", 1)[1])
        terms[unit_vector(k, var, shift - j) + unit_vector(width, pos)] = 1
    return LaurentSeries(k, context, terms)
