import pytest
from sympy.polys.domains import QQ, ZZ

from algebra.builders import chern_tail, morin_factor_count, morin_factors, vandermonde
from algebra.laurent import LaurentSeries, LinearForm, expand_inverse_linear
from algebra.polynomial import GradedPolynomial
from algebra.rational import as_integer, format_rational, parse_rational, to_rational
from algebra.residue import iterated_residue, laurent_coefficients
from algebra.series import segre_from_chern, series_inverse
from algebra.symbols import GradedSymbol, SymbolContext
from algebra.vanishing import vanishing_predicates
from common.exceptions import (
    MalformedFormException,
    TruncationOverflowException,
    ValidationException,
)
from schemas.algebra import PolynomialSchema, SeriesSchema

EMPTY = SymbolContext((), QQ)


def z_form(k, *coeffs, constant=0, context=EMPTY):
    return LinearForm.of(context, list(coeffs) + [0] * (k - len(coeffs)), constant)


# rationals


def test_parse_and_format_rational():
    assert parse_rational("3/6") == QQ(1, 2)
    assert parse_rational(" -4 ") == QQ(-4)
    assert format_rational(QQ(6, 3)) == "2"
    assert format_rational(QQ(-1, 24)) == "-1/24"


@pytest.mark.parametrize("text", ["0.5", "1/0", "a/b", "1e3", ""])
def test_parse_rational_rejects_inexact_text(text):
    with pytest.raises(ValidationException):
        parse_rational(text)


def test_to_rational_rejects_floats_and_bools():
    with pytest.raises(ValidationException):
        to_rational(0.5)
    with pytest.raises(ValidationException):
        to_rational(True)
    with pytest.raises(ValidationException):
        as_integer(QQ(1, 3))


# graded polynomials


def test_polynomial_ring_laws(rng):
    context = SymbolContext((GradedSymbol("a", 1), GradedSymbol("b", 2), GradedSymbol("h", 1, 3)), QQ)

    def random_poly():
        terms = [
            ((rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 3)), QQ(rng.randint(-5, 5), rng.randint(1, 3)))
            for _ in range(4)
        ]
        return GradedPolynomial.from_terms(context, terms)

    for _ in range(20):
        p, q, r = random_poly(), random_poly(), random_poly()
        assert p + q == q + p
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p - p == GradedPolynomial.zero(context)


def test_nilpotent_symbol_truncates():
    context = SymbolContext((GradedSymbol("h", 1, 3),), QQ)
    h = GradedPolynomial.symbol(context, "h")
    assert h**2 != 0
    assert (h**2 * h).is_zero()
    assert ((1 + h) ** 5).degree_in("h") == 2
    assert GradedPolynomial(context, (h**2).poly) == h**2


def test_weighted_degree_and_format():
    context = SymbolContext.chern(2)
    c1 = GradedPolynomial.symbol(context, "c_1")
    c2 = GradedPolynomial.symbol(context, "c_2")
    poly = c1**2 + c2
    assert poly.weighted_degree() == 2
    assert poly.is_homogeneous()
    assert str(poly) == "c_1^2 + c_2"
    assert str(c1 - 3 * c2) == "c_1 - 3c_2"


def test_evaluate_and_substitute():
    context = SymbolContext((GradedSymbol("x", 1), GradedSymbol("y", 1)), ZZ)
    x = GradedPolynomial.symbol(context, "x")
    y = GradedPolynomial.symbol(context, "y")
    poly = x * x + 2 * y
    assert poly.evaluate({"x": "1/2", "y": 1}).content_value() == QQ(9, 4)
    assert poly.substitute("x", y + 1) == y * y + 4 * y + 1


def test_integer_context_rejects_fractions():
    with pytest.raises(ValidationException):
        GradedPolynomial.constant(SymbolContext.chern(1), "1/2")


def test_polynomial_schema_restores_polynomial():
    context = SymbolContext((GradedSymbol("h", 1, 4), GradedSymbol("d", 0)), QQ)
    h = GradedPolynomial.symbol(context, "h")
    d = GradedPolynomial.symbol(context, "d")
    poly = h**3 * d - QQ(1, 7) * h
    schema = PolynomialSchema.from_polynomial(poly)
    assert [t.coeff for t in schema.terms] == ["1", "-1/7"]
    assert schema.to_polynomial() == poly


# Laurent series and inverse expansions


def test_inverse_of_monomial_form():
    series = expand_inverse_linear(z_form(1, -1), 4)
    assert series.raw == {(-1,): QQ(-1)}


def test_inverse_of_two_variable_form():
    series = expand_inverse_linear(z_form(2, 2, -1), 4)
    expected = {(j, -j - 1): QQ(-(2**j)) for j in range(4)}
    assert series.raw == expected


def test_inverse_with_symbolic_constant():
    context = SymbolContext((GradedSymbol("lambda", 1),), QQ)
    lam = GradedPolynomial.symbol(context, "lambda")
    series = expand_inverse_linear(LinearForm.of(context, [-1], lam), ((-5, 5),))
    for j in range(5):
        assert series.coefficient((-j - 1,)) == -(lam**j)


@pytest.mark.parametrize(
    "coeffs, constant",
    [((2, -1), 0), ((1, 1, -1), 0), ((0, 3), 2), ((1, -2, 1), -1)],
)
def test_inverse_times_form_is_one(coeffs, constant):
    form = z_form(len(coeffs), *coeffs, constant=constant)
    window = ((-4, 4),) * len(coeffs)
    inverse = expand_inverse_linear(form, window)
    q = form.leading_index
    inner = tuple((lo + 1, hi) if var == q else (lo, hi) for var, (lo, hi) in enumerate(window))
    product = form.as_series().mul(inverse, window).restrict(inner)
    assert product == LaurentSeries.one(form.k, EMPTY).restrict(inner)


def test_zero_form_is_malformed():
    with pytest.raises(MalformedFormException):
        z_form(2, 0, 0)


def test_leading_variable_needs_room_for_minus_one():
    with pytest.raises(TruncationOverflowException):
        expand_inverse_linear(z_form(2, 1, 1), ((-2, 2), (0, 3)))
    with pytest.raises(TruncationOverflowException):
        expand_inverse_linear(z_form(1, 1), ((None, 3),))


def test_series_shift_and_permutation():
    series = LaurentSeries(2, EMPTY, {(1, 0): 2, (0, -1): 1})
    shifted = series.shift((-1, 1))
    assert shifted.raw == {(0, 1): QQ(2), (-1, 0): QQ(1)}
    assert series.permuted((1, 0)).raw == {(0, 1): QQ(2), (-1, 0): QQ(1)}


def test_series_schema_keeps_window():
    series = LaurentSeries(1, EMPTY, {(-1,): 3, (2,): "1/2"}, window=((-2, 2),))
    restored = SeriesSchema.from_series(series).to_series()
    assert restored == series
    assert restored.window == series.window


# residues


def test_residue_sign_convention():
    one = LaurentSeries.one(1, EMPTY)
    assert iterated_residue(one, [z_form(1, 1)]) == -1
    one2 = LaurentSeries.one(2, EMPTY)
    assert iterated_residue(one2, [z_form(2, 1), z_form(2, 0, 1)]) == 1


def test_residue_with_mixed_factor():
    one = LaurentSeries.one(2, EMPTY)
    assert iterated_residue(one, [z_form(2, 1), z_form(2, 1, 1)]) == 1


def test_residue_with_extra_series():
    context = SymbolContext.chern(1, domain=QQ)
    z = LaurentSeries.monomial(1, context, (1,))
    # z c(1/z) / z = 1 + c_1 / z
    result = iterated_residue(z, [z_form(1, 1, context=context)], [chern_tail(1, 0, context, 0)])
    assert result == -GradedPolynomial.symbol(context, "c_1")


def test_coefficients_do_not_depend_on_margin():
    numerator = LaurentSeries.from_ring_element(3, EMPTY, vandermonde(3, EMPTY))
    base = laurent_coefficients(numerator, morin_factors(3, EMPTY), (), 3)
    wider = laurent_coefficients(numerator, morin_factors(3, EMPTY), (), 3, margin=3)
    assert base == wider
    assert base.coefficient((0, 0, 0)) == 1


def test_morin_factor_count():
    assert [morin_factor_count(k) for k in range(1, 6)] == [0, 1, 3, 7, 13]


# vanishing criteria


def test_vanishing_by_degree_count():
    one = LaurentSeries.one(1, EMPTY)
    report = vanishing_predicates(one, [z_form(1, 1), z_form(1, 1)])
    assert report.verdict.startswith("vanishes")


def test_no_vanishing_when_residue_is_one():
    p = LaurentSeries(2, EMPTY, {(1, 1): 1})
    report = vanishing_predicates(p, [z_form(2, 1), z_form(2, 1, 1)])
    assert report.verdict == "no vanishing certified"
    assert report.certified is None


def test_vanishing_option_one_at_first_level():
    one = LaurentSeries.one(2, EMPTY)
    report = vanishing_predicates(one, [z_form(2, 1), z_form(2, 0, 1), z_form(2, 1, 1)])
    assert report.verdict == "vanishes by option 1 at l = 1"
    hit = report.certified
    assert (hit.lhs, hit.rhs) == (2, 3)


def test_vanishing_needs_factors():
    with pytest.raises(ValidationException):
        vanishing_predicates(LaurentSeries.one(1, EMPTY), [])


# Segre series


def test_series_inverse_low_orders():
    s1, s2 = segre_from_chern(2)
    context = s1.context
    c1 = GradedPolynomial.symbol(context, "c_1")
    c2 = GradedPolynomial.symbol(context, "c_2")
    assert s1 == -c1
    assert s2 == c1**2 - c2


def test_series_inverse_third_order():
    s = segre_from_chern(3)
    context = s[0].context
    c1, c2, c3 = (GradedPolynomial.symbol(context, f"c_{i}") for i in (1, 2, 3))
    assert s[2] == -(c1**3) + 2 * c1 * c2 - c3


def test_series_inverse_needs_input():
    with pytest.raises(ValidationException):
        series_inverse([])
