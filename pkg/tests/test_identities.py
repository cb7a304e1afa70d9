from fractions import Fraction

import pytest

from src.identities import BoundsError, IdentityId, IdentityStatus
from src.identities import bernoulli_checks, operator_checks, stirling_checks
from src.identities.bernoulli_checks import (
    check_c1,
    check_c3,
    check_c5_remark,
    check_c6,
    check_eq13,
    check_eq14,
    check_t1,
    check_t2,
    check_t3,
    check_t5,
    check_t6,
    alternating_stirling_sum,
    remark_series_coefficients,
    t5_coefficients,
    t5_lhs,
    t6_lhs,
)
from src.identities.operator_checks import check_operator_formulas, rising_product
from src.identities.registry import IdentitySweep, register_checker, registered_checkers
from src.identities.runner import SweepBounds, run_all, run_checker, summarize
from src.identities.stirling_checks import (
    check_c2,
    check_c4,
    check_c5,
    check_eq5,
    check_eq6,
    check_l1_inversion,
    check_t4,
)
from src.polynomials.polynomial import Polynomial
from src.sequences.bernoulli import bernoulli_first, bernoulli_polynomial, bernoulli_second


def assert_pass(report):
    assert report.status is IdentityStatus.PASS, report.counterexample
    assert report.counterexample is None
    assert report.checks_performed > 0


def test_every_identity_has_a_checker():
    assert set(registered_checkers()) == set(IdentityId)
    assert len(IdentityId) == 26


@pytest.mark.parametrize(
    "text, expected",
    [
        ("EQ5_ORTHO", IdentityId.EQ5_ORTHO),
        ("eq5", IdentityId.EQ5_ORTHO),
        ("C5", IdentityId.C5),
        ("C5_REMARK_SERIES", IdentityId.C5_REMARK_SERIES),
        ("L1", IdentityId.L1_INVERSION),
        ("t6", IdentityId.T6),
    ],
)
def test_identity_names_parse(text, expected):
    assert IdentityId.parse(text) is expected


def test_unknown_identity_name():
    with pytest.raises(ValueError):
        IdentityId.parse("EQ99")


def test_duplicate_registration_is_rejected():
    with pytest.raises(RuntimeError):
        register_checker(IdentityId.C6, "max_n")(lambda max_n: None)


def test_orthogonality_checkers():
    assert_pass(check_eq5(40))
    assert_pass(check_eq6(40))
    assert check_eq5(3).checks_performed == 10


def test_expansion_of_bernoulli_polynomial_in_falling_factorials():
    report = check_t1(30)
    assert_pass(report)
    # n = 2：X^2 - X + 1/6 = 1/6 + X<2>
    assert bernoulli_polynomial(2) == Polynomial.falling([Fraction(1, 6), 0, 1]).to_monomial()


def test_bernoulli_numbers_in_terms_of_each_other():
    assert_pass(check_c1(50))
    assert_pass(check_t2(50))
    # n = 1：B_1 = -S(0,0) B_1*
    assert bernoulli_first(1) == -bernoulli_second(1)


def test_falling_factorial_in_bernoulli_polynomials():
    assert_pass(check_t3(30))


def test_stirling_cross_sums():
    assert_pass(check_c2(40))
    assert_pass(check_c4(40))
    assert_pass(check_t4(40))
    assert_pass(check_c5(40))


@pytest.mark.parametrize("checker", [check_c2, check_c4, check_t4, check_c5])
def test_widened_summation_range_changes_nothing(checker):
    narrow = checker(20)
    wide = checker(20, full_index_range=True)
    assert_pass(wide)
    assert wide.checks_performed == narrow.checks_performed
    assert wide.notes and not narrow.notes


def test_t4_compares_all_three_forms():
    # 每个 (n,k) 有三次比较：主等式、逐项积分形式、算子级数形式
    assert check_t4(5).checks_performed == 3 * 15


def test_c5_compares_operator_form():
    # 每个 (n,k) 有两次比较：闭式，以及算子级数作用于 x<n-1> 的结果
    report = check_c5(5)
    assert_pass(report)
    assert report.checks_performed == 2 * 15


def test_independent_routes_for_sum_formulas():
    report = check_c3(40)
    assert_pass(report)
    assert report.checks_performed == 2 * 41
    assert_pass(check_c6(50))
    assert bernoulli_first(4) == Fraction(-1, 30)
    assert bernoulli_second(4) == Fraction(-19, 30)


def test_integral_and_expansion_formulas():
    assert_pass(check_eq13(40))
    assert_pass(check_eq14(25))


def test_remark_series():
    coefficients = remark_series_coefficients(4)
    assert coefficients[0] == 1
    assert coefficients[1] == Fraction(-1, 2)
    assert_pass(check_c5_remark(30))
    with pytest.raises(BoundsError):
        check_c5_remark(1)


def test_stirling_inversion_random_trials():
    report = check_l1_inversion(100, 20)
    assert_pass(report)
    assert report.checks_performed == 100 * 2 * 21


def test_stirling_inversion_is_reproducible():
    assert check_l1_inversion(10, 8, seed=7) == check_l1_inversion(10, 8, seed=7)


def test_rising_factorial_formulas():
    assert t5_coefficients(3) == (1, Fraction(3, 2), Fraction(1, 2))
    assert t5_lhs(2, 1) == Fraction(-1, 3)
    assert t6_lhs(2, 2) == Fraction(-1, 12)
    report = check_t5(5, 30)
    assert_pass(report)
    assert any("r = 2" in note for note in report.notes)
    assert not check_t5(1, 5).notes
    assert_pass(check_t6(5, 30))


def test_r_equal_one_reduces_to_single_sums():
    for n in range(15):
        assert t5_lhs(1, n) == alternating_stirling_sum(n)
        assert t6_lhs(1, n) == bernoulli_second(n)


def test_operator_formulas_in_fixed_order():
    reports = check_operator_formulas(25)
    assert [report.id for report in reports] == [
        IdentityId.EQ9_DELTA_FALLING,
        IdentityId.EQ10_DELTA_BERN,
        IdentityId.EQ11_DIFF_BERN,
        IdentityId.EQ12_INT_BERN,
        IdentityId.EQ17_RISING,
        IdentityId.EQ18_RISING_SHIFTED,
        IdentityId.EQ19_DELTAINV_FALLING,
        IdentityId.EQ20_DELTAINV_MONOMIAL,
    ]
    for report in reports:
        assert_pass(report)


def test_rising_formulas_compare_values_pointwise():
    eq17 = operator_checks.check_eq17(6)
    eq18 = operator_checks.check_eq18(6)
    assert_pass(eq17)
    assert_pass(eq18)
    points = len(operator_checks.SAMPLE_POINTS)
    assert eq17.checks_performed == 7 * (1 + points)
    assert eq18.checks_performed == 6 * (1 + points)


def test_rising_formula_catches_wrong_pointwise_value(monkeypatch):
    monkeypatch.setattr(operator_checks, "rising_factorial_int", lambda x, n: Fraction(x) ** n)
    report = operator_checks.check_eq17(4)
    assert report.status is IdentityStatus.FAIL
    # n = 2, x = -3：(-3)(-2) = 6，而 (-3)^2 = 9
    assert report.counterexample.params == {"n": 2, "x": -3, "form": 2}
    assert report.counterexample.lhs == 6


def test_shifted_rising_product():
    assert rising_product(1, 2).coeffs == (2, 3, 1)
    assert rising_product(0, 0).coeffs == (1,)


@pytest.mark.parametrize("checker", [check_eq5, check_c6, check_t1, check_operator_formulas])
def test_non_positive_bounds_are_rejected(checker):
    with pytest.raises(BoundsError):
        checker(0)


def test_t5_rejects_zero_r():
    with pytest.raises(BoundsError):
        check_t5(0, 5)


def test_counterexample_is_reported(monkeypatch):
    broken = list(bernoulli_checks.bernoulli_second_by_series(10))
    broken[3] += 1
    monkeypatch.setattr(bernoulli_checks, "bernoulli_second_by_series", lambda max_n: tuple(broken))
    report = check_eq13(10)
    assert report.status is IdentityStatus.FAIL
    assert report.counterexample.params == {"n": 3}
    assert report.counterexample.lhs == Fraction(1, 4)
    assert report.counterexample.rhs == Fraction(5, 4)
    # 第一个反例之后不再比较
    assert report.checks_performed == 4


def test_sweep_counts_every_comparison():
    sweep = IdentitySweep(IdentityId.C6, "demo", {"max_n": 2})
    report = sweep.run([({"n": 0}, 1, 1), ({"n": 1}, Fraction(1, 2), Fraction(2, 4))])
    assert_pass(report)
    assert report.checks_performed == 2


def test_bounds_validation():
    with pytest.raises(BoundsError):
        SweepBounds(max_n=0)
    with pytest.raises(BoundsError):
        SweepBounds(max_r=0)
    with pytest.raises(BoundsError):
        SweepBounds(trials=-1)
    assert SweepBounds(max_n=40).order == 41
    assert SweepBounds(seed=-5).seed == -5


def test_run_checker_maps_bounds_to_arguments():
    bounds = SweepBounds(max_n=6, max_r=2, trials=3, seed=1)
    assert run_checker(IdentityId.C5_REMARK_SERIES, bounds).params == {"order": 7}
    assert run_checker(IdentityId.T6, bounds).params == {"max_r": 2, "max_n": 6}
    assert run_checker(IdentityId.L1_INVERSION, bounds).params["trials"] == 3


def test_run_all_default_bounds():
    reports = run_all(SweepBounds())
    assert [report.id for report in reports] == list(IdentityId)
    summary = summarize(reports)
    assert summary.passed
    assert summary.total == 26
    assert summary.failed == ()


def test_run_all_parallel_matches_sequential():
    bounds = SweepBounds(max_n=12, max_r=3, trials=5, seed=7)
    assert run_all(bounds, workers=4) == run_all(bounds)


def test_run_all_subset_keeps_declaration_order():
    bounds = SweepBounds(max_n=5, max_r=2, trials=2)
    reports = run_all(bounds, ids=[IdentityId.T6, IdentityId.EQ5_ORTHO])
    assert [report.id for report in reports] == [IdentityId.EQ5_ORTHO, IdentityId.T6]


def test_summary_lists_failures():
    bounds = SweepBounds(max_n=5, max_r=2, trials=2)
    reports = run_all(bounds, ids=[IdentityId.C6])
    failing = IdentitySweep(IdentityId.T1, "demo", {}).run([({"n": 0}, 1, 2)])
    summary = summarize(reports + [failing])
    assert not summary.passed
    assert summary.failed == (IdentityId.T1,)


def test_checker_modules_are_registered():
    names = {entry.func.__module__ for entry in registered_checkers().values()}
    assert names == {stirling_checks.__name__, bernoulli_checks.__name__, operator_checks.__name__}
