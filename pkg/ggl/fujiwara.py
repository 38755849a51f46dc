"""Exact positivity certificates for univariate polynomials in d."""

from typing import List, Sequence, Union

import structlog
from sympy import Poly, floor, integer_nthroot
from sympy.polys.domains import QQ

from algebra.rational import format_rational, to_rational
from common.exceptions import ValidationException
from ggl.intersection import D_SYMBOL, DegreePolynomial
from schemas.ggl import FujiwaraReport

logger = structlog.get_logger()

Coefficients = Union[DegreePolynomial, Sequence[object]]


def _coefficients(p: Coefficients) -> List:
    """p_0..p_N with trailing zeros removed."""
    coeffs = list(p.coeffs) if isinstance(p, DegreePolynomial) else [to_rational(c) for c in p]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        raise ValidationException(message="the zero polynomial has no positivity certificate")
    return coeffs


def least_root_bound(coeffs: Sequence[object], l: int) -> int:
    """Least integer D >= 0 with |p_(N-l)| <= D^l p_N."""
    top = coeffs[-1]
    ratio = abs(coeffs[len(coeffs) - 1 - l]) / top
    if not ratio:
        return 0
    target = -(-int(QQ.numer(ratio)) // int(QQ.denom(ratio)))
    root, exact = integer_nthroot(target, l)
    return int(root) if exact else int(root) + 1


def fujiwara_bound(p: Coefficients) -> int:
    """
    D with |p_(N-l)| <= D^l p_N for every l; then p(d) > 0 whenever d > 2D.
    """
    coeffs = _coefficients(p)
    if coeffs[-1] <= 0:
        raise ValidationException(message="positivity needs a positive leading coefficient")
    degree = len(coeffs) - 1
    return max((least_root_bound(coeffs, l) for l in range(1, degree + 1)), default=0)


def minimal_threshold(p: Coefficients, scan_from: int = 1) -> int:
    """
    Least integer d* >= scan_from such that p(d) > 0 for every integer d >= d*,
    located with exact real-root isolation.
    """
    coeffs = _coefficients(p)
    if coeffs[-1] <= 0:
        raise ValidationException(message="positivity needs a positive leading coefficient")
    poly = Poly([QQ.to_sympy(c) for c in reversed(coeffs)], D_SYMBOL, domain="QQ")

    def value(d: int):
        return poly.eval(d)

    candidate = scan_from
    roots = poly.intervals() if poly.degree() > 0 else []
    if roots:
        (_, upper), _ = roots[-1]
        candidate = max(candidate, int(floor(upper)) + 1)
    while value(candidate) <= 0:
        candidate += 1
    while candidate - 1 >= scan_from and value(candidate - 1) > 0:
        candidate -= 1
    return candidate


def fujiwara_certify(p: Coefficients, scan_from: int = 1) -> FujiwaraReport:
    coeffs = _coefficients(p)
    bound = fujiwara_bound(coeffs)
    d_star = minimal_threshold(coeffs, scan_from)
    logger.debug("fujiwara_certify", degree=len(coeffs) - 1, D=bound, d_star=d_star)
    return FujiwaraReport(
        degree=len(coeffs) - 1,
        leading=format_rational(coeffs[-1]),
        D=str(bound),
        certified_above=str(2 * bound),
        scan_from=scan_from,
        d_star=str(d_star),
    )
