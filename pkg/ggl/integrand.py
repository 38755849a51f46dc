"""
Pieces of the intersection integrand on the jet-differential bundle of a degree-d
hypersurface X in P^(n+1): the symbol context, I(z, h) and the per-variable tails.
"""

from math import comb
from typing import Sequence

from sympy.polys.domains import QQ

from algebra.builders import vandermonde, z_sum
from algebra.laurent import LaurentSeries, combined_ring, unit_vector
from algebra.polynomial import GradedPolynomial
from algebra.rational import to_rational
from algebra.series import series_inverse
from algebra.symbols import GradedSymbol, SymbolContext
from common.exceptions import ValidationException
from thom.qpoly import QPoly

H = "h"
D = "d"
DELTA = "delta"


def default_delta(n: int):
    """1/(n^3 (n+1))."""
    return QQ(1, n**3 * (n + 1))


def check_dimension(n: int) -> None:
    if n < 2:
        raise ValidationException(message=f"the hypersurface dimension must be at least 2, got {n}")


def ggl_context(n: int, symbolic_delta: bool = False) -> SymbolContext:
    """h with h^(n+1) = 0, the degree d and optionally delta, over QQ."""
    symbols = [GradedSymbol(H, 1, n + 1), GradedSymbol(D, 0)]
    if symbolic_delta:
        symbols.append(GradedSymbol(DELTA, 0))
    return SymbolContext(tuple(symbols), QQ)


def resolve_delta(delta):
    if delta is None:
        return None
    value = to_rational(delta)
    if value < 0:
        raise ValidationException(message="delta must be nonnegative")
    return value


def integrand_constants(n: int, delta):
    """
    (alpha, beta) with I(z, h) = (S + 2n^2 h)^(n^2-1) (S - alpha d h - beta h), S = z_1 + ... + z_n:
    alpha = delta n^2 binom(n+1, 2), beta = 2n^4 - n^2 delta (n+2) binom(n+1, 2) - 2n^2.
    ``delta`` may be a rational or a ring generator.
    """
    b = comb(n + 1, 2)
    alpha = delta * n**2 * b
    beta = 2 * n**4 - n**2 * (n + 2) * b * delta - 2 * n**2
    return alpha, beta


def _gen(ring, k: int, context: SymbolContext, name: str):
    return ring.gens[k + context.index(name)]


def i_polynomial(n: int, context: SymbolContext, delta=None):
    """
    I(z, h) in combined_ring(n, context). With ``delta`` None the context must carry
    the delta symbol. Powers of h beyond n are never formed.
    """
    ring = combined_ring(n, context)
    h = _gen(ring, n, context, H)
    d = _gen(ring, n, context, D)
    value = _gen(ring, n, context, DELTA) if delta is None else ring.domain.convert(delta)
    alpha, beta = integrand_constants(n, value)
    s = z_sum(n, context)
    top = n * n - 1
    powers = [ring.one]
    for _ in range(top):
        powers.append(powers[-1] * s)
    base = ring.zero
    for j in range(min(n, top) + 1):
        base += comb(top, j) * (2 * n * n) ** j * h**j * powers[top - j]
    return base * (s - alpha * d * h - beta * h)


def ggl_numerator(n: int, q: QPoly, context: SymbolContext, delta=None) -> LaurentSeries:
    """Q_n prod_(m<l) (z_m - z_l) I(z, h) / (z_1 ... z_n)^n as an exact series."""
    element = vandermonde(n, context) * q.to_ring_element(context) * i_polynomial(n, context, delta)
    return LaurentSeries.from_ring_element(n, context, element).shift((-n,) * n)


def b_sequence(n: int, top: int):
    """Coefficients of (1 + x)^-(n+2) up to x^top: (-1)^j binom(n+1+j, j)."""
    return [(-1) ** j * comb(n + 1 + j, j) for j in range(top + 1)]


def hypersurface_tail(n: int, k: int, var: int, context: SymbolContext) -> LaurentSeries:
    """(1 + d h / z_var) (1 + h / z_var)^-(n+2), finite because h^(n+1) = 0."""
    width = context.size
    hpos, dpos = context.index(H), context.index(D)
    b = b_sequence(n, n)
    terms = {}
    for j in range(n + 1):
        zexp = unit_vector(k, var, -j)
        hpow = unit_vector(width, hpos, j)
        terms[zexp + hpow] = b[j]
        if j:
            with_d = tuple(e + 1 if pos == dpos else e for pos, e in enumerate(hpow))
            terms[zexp + with_d] = b[j - 1]
    return LaurentSeries(k, context, terms)


def hypersurface_segre(n: int, context: SymbolContext) -> Sequence[GradedPolynomial]:
    """
    s_1..s_n of X as polynomials in (h, d): the inverse of c(X) = (1 + h)^(n+2) / (1 + d h).
    """
    h = GradedPolynomial.symbol(context, H)
    d = GradedPolynomial.symbol(context, D)
    # c(X) = (1+h)^(n+2) * sum_j (-d h)^j
    c = []
    for m in range(1, n + 1):
        total = GradedPolynomial.zero(context)
        for j in range(m + 1):
            total = total + comb(n + 2, m - j) * (-d) ** j
        c.append(total * h**m)
    return series_inverse(c)


def i_in_u(n: int, delta=None) -> GradedPolynomial:
    """I_(n,delta,d)(u, h) with u standing for z_1 + ... + z_n, over the context (u, h, d)."""
    check_dimension(n)
    delta = default_delta(n) if delta is None else resolve_delta(delta)
    context = SymbolContext(
        (GradedSymbol("u", 1), GradedSymbol(H, 1), GradedSymbol(D, 0)), QQ
    )
    u = GradedPolynomial.symbol(context, "u")
    h = GradedPolynomial.symbol(context, H)
    d = GradedPolynomial.symbol(context, D)
    alpha, beta = integrand_constants(n, delta)
    return (u + h * (2 * n * n)) ** (n * n - 1) * (u - d * h * alpha - h * beta)
