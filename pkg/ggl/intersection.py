"""
The intersection number I(n, delta, d) as a polynomial in the hypersurface degree d,
and the general tautological integral it specialises.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Tuple

import structlog
from sympy import Poly, Symbol
from sympy.polys.domains import QQ

from algebra.builders import chern_tail, morin_factors, vandermonde, z_sum
from algebra.laurent import LaurentSeries, combined_ring
from algebra.polynomial import GradedPolynomial
from algebra.rational import format_rational, to_rational
from algebra.residue import iterated_residue, laurent_coefficients
from algebra.symbols import GradedSymbol, SymbolContext
from common.exceptions import DimensionMismatchException, InvalidStateException, ValidationException
from ggl.integrand import (
    D,
    DELTA,
    H,
    check_dimension,
    default_delta,
    ggl_context,
    ggl_numerator,
    hypersurface_segre,
    hypersurface_tail,
    resolve_delta,
)
from ggl.rho import rho0
from thom.qpoly import QPoly, resolve_q

logger = structlog.get_logger()

D_SYMBOL = Symbol("d")


@dataclass(frozen=True)
class DegreePolynomial:
    """p_0 + p_1 d + ... + p_(n+1) d^(n+1); ``coeffs[l]`` is p_l."""

    n: int
    coeffs: Tuple[object, ...]

    def __post_init__(self):
        coeffs = tuple(to_rational(c) for c in self.coeffs)
        if len(coeffs) != self.n + 2:
            raise DimensionMismatchException(
                message=f"degree polynomial for n={self.n} needs {self.n + 2} coefficients"
            )
        object.__setattr__(self, "coeffs", coeffs)

    def p(self, l: int):
        return self.coeffs[l] if 0 <= l < len(self.coeffs) else QQ.zero

    @property
    def leading(self):
        return self.coeffs[-1]

    @property
    def degree(self) -> int:
        for l in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[l]:
                return l
        return -1

    def __call__(self, d):
        d = to_rational(d)
        value = QQ.zero
        for c in reversed(self.coeffs):
            value = value * d + c
        return value

    def as_poly(self) -> Poly:
        return Poly([QQ.to_sympy(c) for c in reversed(self.coeffs)], D_SYMBOL, domain="QQ")

    def formatted(self) -> List[str]:
        """p_1..p_(n+1) as "p/q" strings."""
        return [format_rational(c) for c in self.coeffs[1:]]

    def __str__(self) -> str:
        return str(self.as_poly().as_expr())


def _hn_coefficients(
    n: int,
    q: QPoly,
    delta,
    margin: int = 0,
    check_stability: Optional[bool] = None,
) -> Dict[Tuple[int, int], object]:
    """
    {(e, f): c} with c the coefficient of d^e delta^f in p, where the z^(-1,...,-1)
    coefficient of the integrand is h^n p. ``delta`` None keeps delta symbolic.
    """
    symbolic = delta is None
    context = ggl_context(n, symbolic)
    coefficients = laurent_coefficients(
        ggl_numerator(n, q, context, delta),
        morin_factors(n, context),
        [hypersurface_tail(n, n, var, context) for var in range(n)],
        ((-1, -1),) * n,
        margin=margin,
        check_stability=check_stability,
    )
    corner = coefficients.coefficient((-1,) * n)
    hpos, dpos = context.index(H), context.index(D)
    out: Dict[Tuple[int, int], object] = {}
    for exps, c in corner.terms():
        if exps[hpos] != n:
            raise InvalidStateException(
                message=f"residue of the intersection integrand is not a multiple of h^{n}"
            )
        f = exps[context.index(DELTA)] if symbolic else 0
        out[(exps[dpos], f)] = c
    logger.debug("ggl.residue", n=n, symbolic_delta=symbolic, terms=len(out))
    return out


def _degree_polynomial(n: int, q: QPoly, delta, margin: int = 0) -> DegreePolynomial:
    coeffs = [QQ.zero] * (n + 2)
    for (e, _), c in _hn_coefficients(n, q, delta, margin).items():
        if e > n:
            raise InvalidStateException(message=f"d-degree {e + 1} exceeds n + 1 = {n + 1}")
        # integrating h^n over X contributes one more factor d
        coeffs[e + 1] += c
    return DegreePolynomial(n, tuple(coeffs))


@lru_cache(maxsize=None)
def _cached_degree_polynomial(n: int, q: QPoly, delta) -> DegreePolynomial:
    return _degree_polynomial(n, q, delta)


def leading_identity(n: int, delta, p_top, rho_0) -> bool:
    """p_(n+1) = (1 - n^2 binom(n+1, 2) delta) rho_0."""
    return p_top == (1 - n * n * comb(n + 1, 2) * delta) * rho_0


def degree_polynomial(
    n: int,
    delta=None,
    q: Optional[QPoly] = None,
    verify: bool = True,
) -> DegreePolynomial:
    """
    I(n, delta, d) with d symbolic. With ``verify`` the zero constant term, the degree
    bound and the leading-coefficient identity are asserted.
    """
    check_dimension(n)
    q = resolve_q(n, q)
    q.check_balance()
    delta = default_delta(n) if delta is None else resolve_delta(delta)
    poly = _cached_degree_polynomial(n, q, delta)
    if verify:
        if poly.p(0):
            raise InvalidStateException(message="the degree polynomial has a constant term")
        rho_0 = rho0(n, q)
        if not leading_identity(n, delta, poly.leading, rho_0):
            raise InvalidStateException(
                message=(
                    f"leading coefficient {format_rational(poly.leading)} does not match "
                    f"(1 - n^2 binom(n+1,2) delta) rho_0 with rho_0 = {rho_0}"
                )
            )
        if rho_0 and 1 - n * n * comb(n + 1, 2) * delta and poly.degree != n + 1:
            raise InvalidStateException(message=f"degree polynomial has degree {poly.degree}, expected {n + 1}")
    logger.debug("degree_polynomial", n=n, delta=format_rational(delta), coeffs=poly.formatted())
    return poly


def degree_polynomial_in_delta(n: int, q: Optional[QPoly] = None) -> List[Tuple[object, object]]:
    """
    [(a_l, b_l)] for l = 0..n+1 with p_l = a_l + b_l delta, computed with delta symbolic.
    Raises when some p_l is not affine in delta.
    """
    check_dimension(n)
    q = resolve_q(n, q)
    q.check_balance()
    pairs = [[QQ.zero, QQ.zero] for _ in range(n + 2)]
    for (e, f), c in _hn_coefficients(n, q, None).items():
        if f > 1:
            raise InvalidStateException(message=f"p_{e + 1} has degree {f} in delta")
        pairs[e + 1][f] += c
    return [tuple(pair) for pair in pairs]


def intersection_number(n: int, delta=None, d=None, q: Optional[QPoly] = None):
    """
    The integral of h^n-part of the residue times d; a rational for given d, the whole
    DegreePolynomial when d is None.
    """
    poly = degree_polynomial(n, delta, q, verify=False)
    return poly if d is None else poly(d)


# tautological integrals over the compactified jet-differentials bundle


def _p_degree(poly: GradedPolynomial) -> Optional[int]:
    """Degree in (u, h) ignoring every other symbol."""
    context = poly.context
    positions = [context.index("u"), context.index(H)]
    degrees = {sum(exps[p] for p in positions) for exps, _ in poly.terms()}
    if len(degrees) > 1:
        raise ValidationException(message="P(u, h) must be homogeneous in u and h")
    return degrees.pop() if degrees else None


def integrand_context(n: int, p_context: SymbolContext) -> SymbolContext:
    """s_1..s_n followed by the symbols of P other than u, with h^(n+1) = 0."""
    symbols = [GradedSymbol(f"s_{j}", j) for j in range(1, n + 1)]
    for symbol in p_context.symbols:
        if symbol.name == "u":
            continue
        if symbol.name == H:
            symbol = GradedSymbol(H, 1, n + 1)
        symbols.append(symbol)
    return SymbolContext(tuple(symbols), QQ)


def tautological_integrand(
    p: GradedPolynomial, n: int, k: int, q: Optional[QPoly] = None
) -> GradedPolynomial:
    """
    Res (-1)^(nk) Q_k prod(z_m - z_l) P(z_1 + ... + z_k, h) / (prod(z_m + z_r - z_l) (z_1...z_k)^n)
    * prod_j s(1/z_j): the degree-n class in (s, h) to be integrated over X.
    """
    if not 1 <= k <= n:
        raise ValidationException(message=f"need 1 <= k <= n, got k={k}, n={n}")
    for name in ("u", H):
        if name not in p.context.names:
            raise DimensionMismatchException(message=f"P must be a polynomial in u and h; {name} is missing")
    context = integrand_context(n, p.context)
    if p.is_zero():
        return GradedPolynomial.zero(context)
    expected = n + k * (n - 1)
    if _p_degree(p) != expected:
        raise ValidationException(message=f"P has degree {_p_degree(p)} in (u, h), expected {expected}")
    q = resolve_q(k, q)
    q.check_balance()

    ring = combined_ring(k, context)
    s = z_sum(k, context)
    upos = p.context.index("u")
    targets = [k + context.index(name) for name in p.context.names if name != "u"]
    element = ring.zero
    powers = [ring.one]
    for exps, c in p.terms():
        while len(powers) <= exps[upos]:
            powers.append(powers[-1] * s)
        rest = [0] * (k + context.size)
        for target, e in zip(targets, (e for pos, e in enumerate(exps) if pos != upos)):
            rest[target] = e
        element += ring.from_dict({tuple(rest): ring.domain.convert(c)}) * powers[exps[upos]]
    element *= vandermonde(k, context) * q.to_ring_element(context)
    if (n * k) % 2:
        element = -element
    numerator = LaurentSeries.from_ring_element(k, context, element).shift((-n,) * k)
    tails = [chern_tail(k, var, context, 0, prefix="s") for var in range(k)]
    result = iterated_residue(numerator, morin_factors(k, context), tails)
    logger.debug("tautological_integrand", n=n, k=k, terms=len(result.terms()))
    return result


def integrate_over_hypersurface(cls: GradedPolynomial, n: int, d) -> object:
    """
    Substitute the Segre classes of a degree-d hypersurface, keep the h^n part and use
    the integral of h^n being d. Symbols other than s, h and d must already be numbers.
    """
    context = cls.context
    segre = hypersurface_segre(n, context)
    for j, s_j in enumerate(segre, start=1):
        cls = cls.substitute(f"s_{j}", s_j)
    d = to_rational(d)
    cls = cls.evaluate({D: d})
    hpos = context.index(H)
    total = QQ.zero
    for exps, c in cls.terms():
        if any(e for pos, e in enumerate(exps) if pos != hpos):
            raise ValidationException(message=f"class still depends on {context.names} after substitution")
        if exps[hpos] == n:
            total += c
    return total * d
