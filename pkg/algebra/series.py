from typing import List, Sequence

from algebra.polynomial import GradedPolynomial
from algebra.symbols import SymbolContext
from common.exceptions import ValidationException


def series_inverse(c: Sequence[GradedPolynomial]) -> List[GradedPolynomial]:
    """
    s_1..s_n with (1 + c_1 t + ... + c_n t^n)(1 + s_1 t + ... + s_n t^n) = 1 mod t^(n+1),
    via s_m = -(c_1 s_(m-1) + ... + c_m s_0).
    """
    if not c:
        raise ValidationException(message="series inversion needs n >= 1")
    context = c[0].context
    s = [GradedPolynomial.one(context)]
    for m in range(1, len(c) + 1):
        total = GradedPolynomial.zero(context)
        for i in range(1, m + 1):
            total = total + c[i - 1] * s[m - i]
        s.append(-total)
    return s[1:]


def segre_from_chern(n: int) -> List[GradedPolynomial]:
    """Segre classes as polynomials in free Chern symbols c_1..c_n."""
    context = SymbolContext.chern(n)
    return series_inverse([GradedPolynomial.symbol(context, f"c_{i}") for i in range(1, n + 1)])
