import pytest

from algebra.polynomial import GradedPolynomial
from algebra.rational import parse_rational
from common.exceptions import ResourceNotFoundException, ValidationException
from schemas.thom import VerdictEnum
from tests.oracles import one_variable_tp2
from thom.conjecture import predecessors, scan_conjecture, tp3_report
from thom.polynomial import (
    chern_context,
    parse_chern_polynomial,
    table1_coeff_identity,
    table1_row,
    thom_from_series,
    thom_polynomial,
    verify_table1,
)
from thom.qpoly import QPoly, builtin_q, load_q_file
from thom.series import tp2_closed_form, tp3_factorized, tp_window


# Q polynomials


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_builtin_q_is_balanced(k):
    builtin_q(k).check_balance()


def test_q4_terms():
    assert dict(builtin_q(4).terms) == {(1, 0, 0, 0): 2, (0, 1, 0, 0): 1, (0, 0, 0, 1): -1}


def test_q5_needs_the_linear_factor():
    quadratic = QPoly(
        5,
        (
            ((2, 0, 0, 0, 0), 2),
            ((1, 1, 0, 0, 0), 3),
            ((1, 0, 0, 0, 1), -2),
            ((0, 1, 1, 0, 0), 2),
            ((0, 1, 0, 1, 0), -1),
            ((0, 1, 0, 0, 1), -1),
            ((0, 0, 1, 1, 0), -1),
            ((0, 0, 0, 1, 1), 1),
        ),
    )
    assert quadratic.degree == 2 and quadratic.balanced_degree == 3
    with pytest.raises(ValidationException):
        quadratic.check_balance()
    assert builtin_q(5).degree == 3


def test_q_validation():
    with pytest.raises(ValidationException):
        QPoly(2, (((1, 0), 1), ((0, 0), 1)))
    with pytest.raises(ValidationException):
        QPoly(2, (((1, 0), 1), ((1, 0), -1)))
    with pytest.raises(ValidationException):
        QPoly(4, (((1, 1, 0, 0), 1),)).check_balance()
    with pytest.raises(ResourceNotFoundException):
        builtin_q(6)


def test_q_file_loading(write_json):
    path = write_json("q4.json", builtin_q(4).to_file_model().model_dump())
    assert load_q_file(path) == builtin_q(4)
    with pytest.raises(ResourceNotFoundException):
        load_q_file(path + ".missing")
    with pytest.raises(ValidationException):
        load_q_file(write_json("bad.json", {"k": 2, "terms": [{"exp": [0, 0], "coeff": "1/2"}]}))


# Thom series coefficients


def test_k2_series_values():
    table = tp_window(2, radius=3)
    assert table[(0, 0)] == 1
    assert table[(1, -1)] == 1
    assert table[(2, -2)] == 2
    assert table[(-1, 1)] == 0


def test_k2_closed_form():
    table = tp_window(2, radius=12)
    oracle = one_variable_tp2(12)
    for s in range(1, 13):
        assert table[(s, -s)] == tp2_closed_form(s) == oracle[s] == 2 ** (s - 1)
        assert table[(-s, s)] == 0


def test_k3_series_values():
    table = tp_window(3, radius=2)
    assert table[(0, 0, 0)] == 1
    assert table[(1, -1, 0)] == 1


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_leading_coefficient_matches_tp0(k):
    table = tp_window(k, radius=0)
    assert table[(0,) * k] == 1
    leading = thom_polynomial(k).coefficient((k,) + (0,) * (k - 1))
    assert leading == 1


def test_window_keys_sum_to_zero():
    table = tp_window(3, radius=2)
    assert all(sum(i) == 0 for i in table.values)
    assert all(sum(i) == 0 for i in table.keys())
    with pytest.raises(KeyError):
        table[(3, -3, 0)]


def test_export_lists_nonzero_entries():
    export = tp_window(2, radius=2).export()
    assert [(e.i, e.tp) for e in export.entries] == [([0, 0], "1"), ([1, -1], "1"), ([2, -2], "2")]


# Thom polynomials


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_table1_reproduction(k):
    expected, warnings = table1_row(k)
    assert warnings == []
    assert thom_polynomial(k) == expected


def test_tp4_coefficients():
    tp4 = thom_polynomial(4)
    expected = {(4, 0, 0, 0): 1, (2, 1, 0, 0): 6, (0, 2, 0, 0): 2, (1, 0, 1, 0): 9, (0, 0, 0, 1): 6}
    assert {exps: int(c) for exps, c in tp4.terms()} == expected


def test_c5_coefficient():
    assert thom_polynomial(5).coefficient((0, 0, 0, 0, 1)) == 24


def test_first_order_in_positive_codimension():
    for codim in range(3):
        context = chern_context(1, codim)
        assert thom_polynomial(1, codim) == GradedPolynomial.symbol(context, f"c_{codim + 1}")


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_series_reassembly_matches_residue(k):
    assert thom_from_series(k) == thom_polynomial(k)


@pytest.mark.slow
def test_series_reassembly_matches_residue_k5():
    assert thom_from_series(5) == thom_polynomial(5)


def test_series_reassembly_in_codimension_one():
    assert thom_from_series(2, codim=1) == thom_polynomial(2, codim=1)


def test_tp_needs_q_beyond_five():
    with pytest.raises(ResourceNotFoundException):
        thom_polynomial(6)


def test_table1_parser_flags_suspicious_rows():
    _, warnings = table1_row(8)
    assert any("repeats c_2" in w for w in warnings)
    poly, warnings = parse_chern_polynomial("c_1^2 + c_2", 2)
    assert warnings == [] and str(poly) == "c_1^2 + c_2"
    with pytest.raises(ValidationException):
        parse_chern_polynomial("c_1 + x", 2)


def test_verify_table1_passes():
    report = verify_table1(5)
    assert report.verdict == VerdictEnum.PASS
    assert (report.passed, report.total) == (5, 5)


def test_verify_table1_catches_a_perturbed_q():
    broken = builtin_q(4).perturbed((1, 0, 0, 0))
    report = verify_table1(4, {4: broken})
    assert report.verdict == VerdictEnum.FAIL
    assert report.passed == 3
    assert report.rows[-1].differences


def test_verify_table1_range():
    with pytest.raises(ValidationException):
        verify_table1(9)


@pytest.mark.parametrize(
    "k, partition",
    [(2, [1, 1]), (2, [2]), (3, [1, 1, 1]), (3, [1, 2]), (3, [3]), (4, [2, 2]), (4, [1, 3]), (4, [4])],
)
def test_coefficient_identity(k, partition):
    report = table1_coeff_identity(k, partition)
    assert report.verdict == VerdictEnum.PASS
    assert report.direct == report.from_series


@pytest.mark.slow
@pytest.mark.parametrize("partition", [[1, 1, 1, 1, 1], [1, 1, 1, 2], [1, 2, 2], [1, 1, 3], [2, 3], [1, 4], [5]])
def test_coefficient_identity_k5(partition):
    assert table1_coeff_identity(5, partition).verdict == VerdictEnum.PASS


def test_coefficient_identity_rejects_non_partitions():
    with pytest.raises(ValidationException):
        table1_coeff_identity(3, [1, 1])


# conjecture scans


def test_predecessors_of_k2_diagonal():
    assert predecessors((2, -2)) == {(1, -1)}
    assert predecessors((1, -1)) == {(0, 0)}
    with pytest.raises(ValidationException):
        predecessors((1, 0))


def test_scan_k2():
    report = scan_conjecture(2, 6)
    assert report.verdict == VerdictEnum.PASS
    assert report.negatives == [] and report.violations == []


def test_scan_k3():
    report = scan_conjecture(3, 6)
    assert report.negatives == []
    assert report.violations == []


@pytest.mark.slow
@pytest.mark.parametrize("k", [4, 5])
def test_scan_k4_k5(k):
    report = scan_conjecture(k, 5)
    assert report.negatives == []
    assert report.violations == []


def test_factorized_k3_table_matches_direct_expansion():
    direct = tp_window(3, radius=6)
    factorized = tp3_factorized(6)
    assert all(direct[i] == factorized[i] for i in direct.keys())


def test_tp3_report():
    report = tp3_report(6)
    assert report.verdict == VerdictEnum.PASS
    assert report.mismatches == []
    assert report.ratio_violations == []
    assert report.predecessor_violations == []


def test_ratio_fields_are_exact_rational_strings():
    report = table1_coeff_identity(3, [1, 2])
    assert report.power_bound == "9"
    assert report.ratio_bound == report.direct
    assert parse_rational(report.tp_ratio) >= 0
    assert scan_conjecture(2, 4).ratio_bound == "4"
    max_ratio = tp3_report(6).max_ratio
    assert max_ratio is not None and parse_rational(max_ratio) < 9
