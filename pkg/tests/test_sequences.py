import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from src.exact_arith import DomainError
from src.polynomials.polynomial import Polynomial
from src.sequences import BernoulliKind, StirlingKind
from src.sequences.bernoulli import (
    bernoulli_cache,
    bernoulli_first,
    bernoulli_first_by_egf,
    bernoulli_first_by_recurrence,
    bernoulli_polynomial,
    bernoulli_polynomial_derivative_at_zero,
    bernoulli_second,
    bernoulli_second_by_series,
    bernoulli_second_by_stirling,
    lambda_coeff,
)
from src.sequences.stirling import (
    falling_to_monomial_matrix,
    monomial_to_falling_matrix,
    stirling1,
    stirling1_unsigned,
    stirling2,
    stirling_row,
    stirling_triangle,
)


def test_first_kind_values():
    assert stirling1(4, 2) == 11
    for n in range(10):
        assert stirling1(n, n) == 1
    for m in range(1, 7):
        assert stirling1(m, 1) == (-1) ** (m - 1) * math.factorial(m - 1)


def test_second_kind_values():
    assert stirling2(4, 2) == 7
    for n in range(10):
        assert stirling2(n, n) == 1
    for m in range(1, 7):
        assert stirling2(m, 1) == 1


def test_unsigned_first_kind_values():
    assert (stirling1_unsigned(2, 1), stirling1_unsigned(2, 2)) == (1, 1)
    assert stirling_row(StirlingKind.FIRST_UNSIGNED, 3) == (0, 2, 3, 1)
    for n in range(12):
        for k in range(n + 1):
            assert stirling1_unsigned(n, k) == abs(stirling1(n, k))


def test_boundary_conventions():
    assert stirling1(0, 0) == stirling2(0, 0) == 1
    assert stirling1(5, 0) == stirling2(5, 0) == 0
    assert stirling1(3, 7) == stirling2(3, 7) == 0
    with pytest.raises(DomainError):
        stirling2(-1, 0)


def test_row_sums():
    for n in range(26):
        assert sum(stirling_row(StirlingKind.FIRST_UNSIGNED, n)) == math.factorial(n)
    for n in range(2, 26):
        assert sum(stirling_row(StirlingKind.FIRST_SIGNED, n)) == 0


def test_orthogonality():
    for n in range(41):
        for m in range(n + 1):
            expected = 1 if n == m else 0
            assert sum(stirling1(n, i) * stirling2(i, m) for i in range(m, n + 1)) == expected
            assert sum(stirling2(n, i) * stirling1(i, m) for i in range(m, n + 1)) == expected


def test_conversion_matrices_are_the_triangles():
    for n in range(15):
        assert falling_to_monomial_matrix(n) == stirling_row(StirlingKind.FIRST_SIGNED, n)
        assert monomial_to_falling_matrix(n) == stirling_row(StirlingKind.SECOND, n)
        assert Polynomial.falling_factorial(n).to_monomial().coeffs == stirling_row(StirlingKind.FIRST_SIGNED, n)
        assert Polynomial.x_power(n).to_falling().coeffs == stirling_row(StirlingKind.SECOND, n)


def test_triangle_grows_consistently_under_concurrency():
    triangle = stirling_triangle(StirlingKind.SECOND)
    with ThreadPoolExecutor(max_workers=8) as executor:
        rows = list(executor.map(triangle.row, [60, 10, 45, 60, 33, 59]))
    assert rows[0] == rows[3]
    assert len(triangle) >= 61
    assert triangle.get(60, 1) == 1


def test_first_kind_bernoulli_values():
    expected = [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42)]
    assert [bernoulli_first(n) for n in range(7)] == expected


def test_second_kind_bernoulli_values():
    assert bernoulli_second(0) == 1
    assert bernoulli_second(1) == Fraction(1, 2)
    assert bernoulli_second(2) == Fraction(-1, 6)
    assert bernoulli_second(3) == Fraction(1, 4)
    assert bernoulli_second(4) == Fraction(-19, 30)


def test_first_kind_routes_agree():
    primary = bernoulli_cache(BernoulliKind.FIRST).prefix(100)
    assert bernoulli_first_by_recurrence(100) == primary
    assert bernoulli_first_by_egf(100) == primary


def test_second_kind_routes_agree():
    primary = bernoulli_cache(BernoulliKind.SECOND).prefix(100)
    assert bernoulli_second_by_series(100) == primary
    assert tuple(bernoulli_second_by_stirling(n) for n in range(101)) == primary


def test_odd_first_kind_bernoulli_numbers_vanish():
    assert bernoulli_first(1) == Fraction(-1, 2)
    for n in range(3, 100, 2):
        assert bernoulli_first(n) == 0, n


def test_recurrence_sum_vanishes():
    b = bernoulli_first_by_recurrence(30)
    for n in range(2, 31):
        assert sum(math.comb(n, k) * b[k] for k in range(n)) == 0


def test_bernoulli_polynomial_shape():
    assert bernoulli_polynomial(0).coeffs == (1,)
    assert bernoulli_polynomial(2).coeffs == (Fraction(1, 6), -1, 1)
    for n in range(15):
        p = bernoulli_polynomial(n)
        assert p.degree == n
        assert p.coefficient(n) == 1
        assert p(0) == bernoulli_first(n)


def test_bernoulli_polynomial_taylor_coefficients():
    assert bernoulli_polynomial_derivative_at_zero(4, 0) == Fraction(-1, 30)
    assert bernoulli_polynomial_derivative_at_zero(4, 4) == 24
    assert bernoulli_polynomial_derivative_at_zero(3, 1) == 3 * Fraction(1, 6)
    assert bernoulli_polynomial_derivative_at_zero(2, 5) == 0


def test_lambda_coefficients():
    for n in range(10):
        assert lambda_coeff(1, n, 0) == 1
        assert lambda_coeff(2, n, 0) == n
        assert lambda_coeff(2, n, 1) == 1
        assert lambda_coeff(3, n, 0) == n * n
        assert lambda_coeff(3, n, 1) == 2 * n + 1
        assert lambda_coeff(3, n, 2) == 1


@pytest.mark.parametrize("k", [-1, 3, 7])
def test_lambda_rejects_out_of_range_k(k):
    with pytest.raises(DomainError):
        lambda_coeff(3, 2, k)
