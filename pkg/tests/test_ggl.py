import pytest
from sympy import Rational, expand
from sympy.polys.domains import QQ

from algebra.polynomial import GradedPolynomial
from common.exceptions import ValidationException
from ggl import (
    b_coefficient,
    degree_polynomial,
    degree_polynomial_in_delta,
    fujiwara_bound,
    fujiwara_certify,
    ggl_certificate,
    inequality_suite,
    integrate_over_hypersurface,
    intersection_number,
    minimal_threshold,
    rho0_generating,
    rho_coefficient,
    tautological_integrand,
)
from ggl.inequalities import first_factor_expansion, ratio_check, rho_sum, rho_windows
from ggl.integrand import default_delta, hypersurface_segre, i_in_u
from ggl.rho import b_bound_holds, rho0
from schemas.thom import VerdictEnum
from tests.oracles import ggl_degree_polynomial
from thom.qpoly import builtin_q


# rho coefficients


def test_rho0_by_both_routes():
    assert rho_coefficient((0, 0), 2).value == 12
    assert rho0_generating(2) == 12
    assert rho0(2) == 12


def test_rho_over_unit_vectors_sums_to_rho0():
    total = sum(rho_coefficient(i, 2).value for i in [(-1, 0), (0, -1)])
    assert total == 12


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4])
def test_rho_over_unit_vectors_sums_to_rho0_higher(n):
    unit = [tuple(-int(s == t) for t in range(n)) for s in range(n)]
    assert sum(rho_coefficient(i, n).value for i in unit) == rho_coefficient((0,) * n, n).value
    assert rho0_generating(n) == rho_coefficient((0,) * n, n).value > 0


def test_mismatched_power_gives_flagged_zero():
    value = rho_coefficient((-1, -1), 2, power=4)
    assert value.value == 0 and not value.consistent
    assert rho_coefficient((-1, -1), 2).consistent
    with pytest.raises(ValidationException):
        rho_coefficient((0, 0, 0), 2)


def test_b_coefficients():
    assert b_coefficient((0, 0), 2) == 1
    assert b_coefficient((1, 0), 2) == -4
    assert b_coefficient((1, 1), 2) == 16
    assert b_coefficient((2, 0), 2) == 10
    assert b_bound_holds((1, 1), 2)
    with pytest.raises(ValidationException):
        b_coefficient((-1, 0), 2)


# degree polynomial


def test_degree_polynomial_n2():
    poly = degree_polynomial(2)
    assert poly.p(0) == 0
    assert poly.leading == 6
    assert poly.degree == 3
    assert intersection_number(2) == poly
    assert intersection_number(2, d=5) == poly(5)


def test_degree_polynomial_matches_direct_expansion():
    poly = degree_polynomial(2)
    oracle = ggl_degree_polynomial(2, Rational(1, 24))
    assert expand(poly.as_poly().as_expr() - oracle.as_expr()) == 0


@pytest.mark.slow
def test_degree_polynomial_matches_direct_expansion_n3():
    poly = degree_polynomial(3)
    oracle = ggl_degree_polynomial(3, Rational(1, 108))
    assert expand(poly.as_poly().as_expr() - oracle.as_expr()) == 0
    assert poly.leading == QQ(rho0(3), 2)


def test_degree_polynomial_without_delta():
    assert degree_polynomial(2, 0).leading == 12


def test_coefficients_are_affine_in_delta():
    pairs = degree_polynomial_in_delta(2)
    assert pairs[0] == (0, 0)
    assert pairs[3] == (12, -144)
    poly = degree_polynomial(2)
    for l, (a, b) in enumerate(pairs):
        assert a + b * default_delta(2) == poly.p(l)


def test_lower_coefficients_are_dominated():
    poly = degree_polynomial(2)
    for l in (1, 2):
        assert abs(poly.p(3 - l)) < 2 ** (10 * l) * poly.leading


def test_dimension_one_is_rejected():
    with pytest.raises(ValidationException):
        degree_polynomial(1)
    with pytest.raises(ValidationException):
        degree_polynomial(2, "-1/3")


# Fujiwara bound and thresholds


def test_fujiwara_linear():
    assert fujiwara_bound([-1, 1]) == 1
    assert minimal_threshold([-1, 1]) == 2


def test_fujiwara_quadratic():
    report = fujiwara_certify([0, -3, 1])
    assert (report.D, report.certified_above, report.d_star) == ("3", "6", "4")


def test_threshold_respects_scan_start():
    assert minimal_threshold([1, 1], scan_from=5) == 5


def test_fujiwara_needs_positive_leading_coefficient():
    with pytest.raises(ValidationException):
        fujiwara_bound([1, -1])
    with pytest.raises(ValidationException):
        fujiwara_bound([0, 0])


# certificates


def test_certificate_n2():
    cert = ggl_certificate(2)
    assert cert.verdict == VerdictEnum.PASS
    assert cert.delta == "1/24"
    assert cert.rho0 == "12"
    assert cert.coeffs[-1] == "6"
    assert cert.leading_identity and cert.leading_positive and cert.ineq_10l
    assert int(cert.d_star) <= 2 * 2**10


def test_certificate_fails_when_leading_coefficient_vanishes():
    cert = ggl_certificate(2, "1/12")
    assert cert.verdict == VerdictEnum.FAIL
    assert not cert.leading_positive
    assert (cert.fujiwara_D, cert.d_star) == ("n/a", "n/a")


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4])
def test_certificate_higher_dimensions(n):
    cert = ggl_certificate(n)
    assert cert.leading_identity
    assert cert.verdict == VerdictEnum.PASS


# tautological integrals


@pytest.mark.parametrize("d", [3, 7, 100])
def test_tautological_integral_matches_intersection_number(d):
    integrand = tautological_integrand(i_in_u(2), 2, 2)
    assert integrate_over_hypersurface(integrand, 2, d) == intersection_number(2, d=d)


def test_tautological_integrand_of_zero():
    zero = GradedPolynomial.zero(i_in_u(2).context)
    assert tautological_integrand(zero, 2, 2).is_zero()


def test_tautological_integrand_is_homogeneous():
    u = GradedPolynomial.symbol(i_in_u(2).context, "u")
    result = tautological_integrand(u**4, 2, 2)
    assert result.is_homogeneous()
    assert result.weighted_degree() in (None, 2)


def test_tautological_integrand_checks_degree():
    u = GradedPolynomial.symbol(i_in_u(2).context, "u")
    with pytest.raises(ValidationException):
        tautological_integrand(u**3, 2, 2)
    with pytest.raises(ValidationException):
        tautological_integrand(u**4, 2, 3)


def test_hypersurface_segre_classes():
    context = i_in_u(2).context
    s1, s2 = hypersurface_segre(2, context)
    h = GradedPolynomial.symbol(context, "h")
    d = GradedPolynomial.symbol(context, "d")
    # c(X) = 1 + (4 - d) h + (6 - 4d + d^2) h^2
    assert s1 == (d - 4) * h
    assert s2 == (10 - 4 * d) * h**2


# inequality suite


def test_inequality_suite_n2():
    report = inequality_suite(2)
    assert report.verdict == VerdictEnum.PASS
    assert [c.item for c in report.checks] == ["a", "b", "c", "d", "B"]


def test_ratios_at_degree_100():
    expansion = first_factor_expansion(2, builtin_q(2), default_delta(2))
    check = ratio_check(2, expansion, QQ(100))
    assert check.verdict == VerdictEnum.PASS
    assert {e.lhs for e in check.entries} == {"24/25", "32/25"}


def test_rho_sum_over_unit_vectors():
    windows = rho_windows(2, builtin_q(2))
    assert rho_sum(2, 1, 1, windows[1]) == 12
    assert rho_sum(2, 0, 0, windows[0]) == 12


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4])
def test_inequality_suite_higher_dimensions(n):
    assert inequality_suite(n).verdict == VerdictEnum.PASS
