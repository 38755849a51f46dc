from ggl.certificate import ggl_certificate
from ggl.fujiwara import fujiwara_bound, fujiwara_certify, minimal_threshold
from ggl.inequalities import inequality_suite
from ggl.intersection import (
    DegreePolynomial,
    degree_polynomial,
    degree_polynomial_in_delta,
    integrate_over_hypersurface,
    intersection_number,
    tautological_integrand,
)
from ggl.rho import RhoValue, b_coefficient, rho0_generating, rho_coefficient

__all__ = [
    "DegreePolynomial",
    "RhoValue",
    "b_coefficient",
    "degree_polynomial",
    "degree_polynomial_in_delta",
    "fujiwara_bound",
    "fujiwara_certify",
    "ggl_certificate",
    "inequality_suite",
    "integrate_over_hypersurface",
    "intersection_number",
    "minimal_threshold",
    "rho0_generating",
    "rho_coefficient",
    "tautological_integrand",
]
