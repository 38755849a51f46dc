import random

import pytest
from sympy.polys.domains import QQ

from algebra.polynomial import GradedPolynomial
from common.exceptions import DimensionMismatchException, ValidationException
from equivariant import (
    MonomialIdeal,
    WeightAssignment,
    fixed_point_sum,
    localisation_oracle,
    mdeg_complete_intersection,
    mdeg_monomial,
    residue_side,
    weight_degree_report,
)
from equivariant.localisation import completed, random_lambdas, random_q, z_context
from equivariant.multidegree import mdeg_report, weight_context
from schemas.equivariant import OracleVerdictEnum


def lam(r, *indices):
    context = weight_context(r)
    result = GradedPolynomial.one(context)
    for i in indices:
        result = result * GradedPolynomial.symbol(context, f"lambda_{i}")
    return result


def identity_weights(N):
    return WeightAssignment(N, tuple(tuple(int(i == j) for j in range(N)) for i in range(N)))


def z(k, name):
    return GradedPolynomial.symbol(z_context(k), name)


# multidegrees


def test_coordinate_hyperplane():
    assert mdeg_monomial(MonomialIdeal.of(1, (1,)), identity_weights(1)) == lam(1, 1)


def test_square_counts_twice():
    assert mdeg_monomial(MonomialIdeal.of(2, (2, 0)), identity_weights(2)) == 2 * lam(2, 1)


def test_two_hyperplanes():
    assert mdeg_monomial(MonomialIdeal.of(2, (1, 1)), identity_weights(2)) == lam(2, 1) + lam(2, 2)


def test_fat_point_multiplicity():
    ideal = MonomialIdeal.of(2, (2, 0), (1, 1), (0, 2))
    assert ideal.codimension() == 2
    assert mdeg_monomial(ideal, identity_weights(2)) == 3 * lam(2, 1, 2)


def test_generators_are_minimalized():
    ideal = MonomialIdeal.of(2, (1, 0), (2, 1), (1, 0))
    assert ideal.generators == ((1, 0),)


def test_complete_intersections():
    assert mdeg_complete_intersection([[1, 0]], 2) == lam(2, 1)
    assert mdeg_complete_intersection([[2, 0], [1, 1]], 2) == 2 * lam(2, 1, 1) + 2 * lam(2, 1, 2)
    assert mdeg_complete_intersection([], 2) == 1
    ideal = MonomialIdeal.of(2, (2, 0), (0, 3))
    assert mdeg_monomial(ideal, identity_weights(2)) == mdeg_complete_intersection([[2, 0], [0, 3]], 2)


def test_union_is_additive():
    weights = WeightAssignment(2, ((1, 2), (3, -1), (0, 1)))
    first = MonomialIdeal.of(3, (2, 0, 0))
    second = MonomialIdeal.of(3, (0, 1, 0))
    union = first.union_with(second)
    assert union.generators == ((2, 1, 0),)
    assert mdeg_monomial(union, weights) == mdeg_monomial(first, weights) + mdeg_monomial(second, weights)


def test_elimination_multiplies_by_new_weight():
    weights = WeightAssignment(2, ((1, 0), (0, 1)))
    for ideal in [
        MonomialIdeal.of(2, (1, 1)),
        MonomialIdeal.of(2, (2, 0), (0, 1)),
        MonomialIdeal.of(2, (3, 0), (1, 1)),
    ]:
        extended = mdeg_monomial(ideal.extended(), weights.extended((1, 1)))
        assert extended == (lam(2, 1) + lam(2, 2)) * mdeg_monomial(ideal, weights)


POSITIVITY_SUITE = [
    MonomialIdeal.of(1, (3,)),
    MonomialIdeal.of(2, (1, 1)),
    MonomialIdeal.of(2, (2, 0), (0, 2)),
    MonomialIdeal.of(2, (2, 0), (1, 1), (0, 2)),
    MonomialIdeal.of(3, (1, 1, 1)),
    MonomialIdeal.of(3, (1, 0, 0), (0, 1, 0)),
    MonomialIdeal.of(3, (2, 1, 0), (0, 1, 2)),
    MonomialIdeal.of(3, (1, 1, 0), (0, 1, 1), (1, 0, 1)),
    MonomialIdeal.of(3, (3, 0, 0), (0, 2, 0), (0, 0, 1)),
    MonomialIdeal.of(4, (1, 1, 0, 0), (0, 0, 1, 1)),
    MonomialIdeal.of(4, (2, 0, 0, 0), (1, 1, 0, 0), (0, 0, 0, 3)),
]


@pytest.mark.parametrize("ideal", POSITIVITY_SUITE)
def test_mdeg_has_nonnegative_integer_coefficients(ideal):
    mdeg = mdeg_monomial(ideal, identity_weights(ideal.N))
    assert mdeg.is_homogeneous()
    assert mdeg.weighted_degree() == ideal.codimension()
    assert all(int(c) == c and c > 0 for _, c in mdeg.terms())


def test_symmetric_ideal_ignores_weight_swap():
    ideal = MonomialIdeal.of(2, (2, 1), (1, 2))
    weights = WeightAssignment(2, ((1, 2), (3, 0)))
    swapped = WeightAssignment(2, ((3, 0), (1, 2)))
    assert mdeg_monomial(ideal, weights) == mdeg_monomial(ideal, swapped)


def test_mdeg_errors():
    with pytest.raises(ValidationException):
        mdeg_monomial(MonomialIdeal(2, ()), identity_weights(2))
    with pytest.raises(ValidationException):
        mdeg_monomial(MonomialIdeal.of(2, (0, 0)), identity_weights(2))
    with pytest.raises(DimensionMismatchException):
        mdeg_monomial(MonomialIdeal.of(2, (1, 0)), identity_weights(3))
    with pytest.raises(DimensionMismatchException):
        WeightAssignment(2, ((1, 0, 0),))


def test_mdeg_report_lists_components():
    report = mdeg_report(MonomialIdeal.of(2, (2, 1)), identity_weights(2))
    assert report.codimension == 1
    assert [(c.coordinates, c.multiplicity) for c in report.components] == [([1], 2), ([2], 1)]
    assert report.mdeg == str(2 * lam(2, 1) + lam(2, 2))


# weight degree reports


def test_weight_degree_equality_case():
    report = weight_degree_report(MonomialIdeal.of(2, (1, 1)), WeightAssignment(1, ((1,), (1,))), 1)
    assert (report.degree, report.bound) == (1, 1)
    assert report.holds and report.message == "holds with equality"


def test_weight_degree_reports_a_failing_instance():
    report = weight_degree_report(MonomialIdeal.of(1, (1,)), WeightAssignment(1, ((1,),)), 1)
    assert (report.degree, report.bound) == (1, 0)
    assert not report.holds
    assert report.message == "inequality not satisfied on this instance"


def test_weight_degree_without_the_weight():
    report = weight_degree_report(MonomialIdeal.of(2, (0, 2)), identity_weights(2), 1)
    assert report.degree == 0 and report.holds
    with pytest.raises(ValidationException):
        weight_degree_report(MonomialIdeal.of(2, (0, 2)), identity_weights(2), 3)


# fixed-point sums


def test_single_point():
    assert fixed_point_sum(GradedPolynomial.one(z_context(1)), [5], 1) == 1


def test_linear_sum_is_constant():
    q = z(1, "z_1")
    for values in ([1, 2], [3, -7], ["1/2", "5/3"]):
        assert fixed_point_sum(q, values, 1) == -1


def test_opposite_summands_cancel():
    assert fixed_point_sum(GradedPolynomial.one(z_context(2)), [1, 4], 2) == 0


def test_sum_is_symmetric_in_the_weights(rng):
    q = random_q(rng, 2, 3)
    values = random_lambdas(rng, 4)
    shuffled = list(values)
    rng.shuffle(shuffled)
    assert fixed_point_sum(q, values, 2) == fixed_point_sum(q, shuffled, 2)


def test_completion_appends_unused_indices():
    assert completed((2, 0), 4) == (2, 0, 1, 3)
    assert completed((), 2) == (0, 1)


def test_fixed_point_errors():
    q = z(1, "z_1")
    with pytest.raises(ValidationException):
        fixed_point_sum(q, [1, 1], 1)
    with pytest.raises(ValidationException):
        fixed_point_sum(GradedPolynomial.one(z_context(3)), [1, 2], 3)
    with pytest.raises(DimensionMismatchException):
        fixed_point_sum(q, [1, 2, 3], 2)


# localisation oracle


def test_residue_side_single_variable():
    assert residue_side(z(1, "z_1"), 2, 1) == -1


def test_residue_side_vanishes_by_degree():
    assert residue_side(GradedPolynomial.one(z_context(2)), 2, 2).is_zero()


def test_residue_side_is_order_independent(rng):
    q = random_q(rng, 2, 3)
    assert residue_side(q, 3, 2) == residue_side(q, 3, 2, order=(1, 0))


def test_oracle_examples():
    report = localisation_oracle(z(1, "z_1"), 2, 1, seed=3)
    assert report.verdict == OracleVerdictEnum.EQUAL
    assert report.trials[0].fixed_point == report.trials[0].residue == "-1"
    report = localisation_oracle(GradedPolynomial.one(z_context(2)), 2, 2, seed=3)
    assert report.trials[0].residue == "0"


@pytest.mark.parametrize("seed", range(10))
def test_oracle_quadratic_product(seed):
    q = z(2, "z_1") * z(2, "z_2")
    assert localisation_oracle(q, 3, 2, seed).verdict == OracleVerdictEnum.EQUAL


def test_oracle_is_deterministic():
    first = localisation_oracle(None, 3, 2, seed=11, trials=2)
    second = localisation_oracle(None, 3, 2, seed=11, trials=2)
    assert first.model_dump() == second.model_dump()


@pytest.mark.parametrize("k, n", [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (3, 3)])
def test_oracle_grid(k, n):
    for seed in range(3):
        report = localisation_oracle(None, n, k, seed, trials=10)
        assert report.verdict == OracleVerdictEnum.EQUAL


@pytest.mark.slow
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_oracle_grid_n4(k):
    for seed in range(3):
        assert localisation_oracle(None, 4, k, seed, trials=10).verdict == OracleVerdictEnum.EQUAL


def test_oracle_rejects_k_above_n():
    with pytest.raises(ValidationException):
        localisation_oracle(None, 2, 3, seed=0)


def test_random_weights_are_distinct():
    values = random_lambdas(random.Random(1), 6, bound=2)
    assert len(set(values)) == 6
    assert all(isinstance(v, type(QQ(1))) for v in values)
