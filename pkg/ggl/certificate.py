"""The end-to-end positivity certificate for the degree polynomial I(n, delta, d)."""

from typing import Optional

import structlog
from sympy.polys.domains import QQ

from algebra.rational import format_rational
from ggl.fujiwara import fujiwara_certify
from ggl.integrand import check_dimension, default_delta, resolve_delta
from ggl.intersection import degree_polynomial, leading_identity
from ggl.rho import rho0
from schemas.ggl import GGLCertificateSchema
from schemas.thom import VerdictEnum
from thom.qpoly import QPoly, resolve_q

logger = structlog.get_logger()


def degree_threshold(n: int) -> int:
    """2 n^10."""
    return 2 * n**10


def ggl_certificate(n: int, delta=None, q: Optional[QPoly] = None) -> GGLCertificateSchema:
    """
    Degree polynomial, leading identity, |p_(n+1-l)| < n^(10l) p_(n+1), the Fujiwara bound
    and the least d* from which I(n, delta, d) stays positive. PASS needs every flag and
    d* <= 2 n^10.
    """
    check_dimension(n)
    q = resolve_q(n, q)
    delta = default_delta(n) if delta is None else resolve_delta(delta)
    poly = degree_polynomial(n, delta, q, verify=False)
    rho_0 = rho0(n, q)
    identity = leading_identity(n, delta, poly.leading, rho_0)
    positive = poly.leading > 0
    if delta < QQ(2, n**3 * (n + 1)) and not positive:
        logger.warning("ggl.leading_not_positive", n=n, delta=format_rational(delta))
    ineq = all(abs(poly.p(n + 1 - l)) < n ** (10 * l) * poly.leading for l in range(1, n + 1))
    bound = "n/a"
    d_star = "n/a"
    threshold_ok = False
    if positive:
        report = fujiwara_certify(poly, scan_from=n + 3)
        bound, d_star = report.D, report.d_star
        threshold_ok = int(d_star) <= degree_threshold(n)
    passed = identity and positive and ineq and threshold_ok
    logger.info(
        "ggl_certificate",
        n=n,
        delta=format_rational(delta),
        identity=identity,
        ineq_10l=ineq,
        d_star=d_star,
        passed=passed,
    )
    return GGLCertificateSchema(
        n=n,
        delta=format_rational(delta),
        coeffs=poly.formatted(),
        rho0=str(rho_0),
        leading_identity=identity,
        leading_positive=positive,
        ineq_10l=ineq,
        fujiwara_D=bound,
        d_star=d_star,
        verdict=VerdictEnum.PASS if passed else VerdictEnum.FAIL,
    )
