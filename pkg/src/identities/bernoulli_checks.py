"""Bernoulli 数（两类）与 Bernoulli 多项式相关的恒等式

每个检查器至少有一侧来自与被测公式无关的计算路径：
B_n 的主路径是第二类 Stirling 数求和，因此凡是以该求和为被测对象的地方都改用递推或生成函数；
B_n* 的主路径是 ∫_0^1 x<n> dx，凡是以 s(n,i)/(i+1) 求和为被测对象的地方都改用 t/log(1+t) 的系数。
"""

import math
from fractions import Fraction
from typing import Tuple

from src.polynomials.operators import op_delta_inv, op_diff, poly_integrate_01
from src.polynomials.polynomial import Polynomial, poly_eval
from src.polynomials.power_series import series_div, series_geom, series_log1p
from src.sequences.bernoulli import (
    bernoulli_first,
    bernoulli_first_by_egf,
    bernoulli_first_by_recurrence,
    bernoulli_polynomial,
    bernoulli_polynomial_derivative_at_zero,
    bernoulli_second,
    bernoulli_second_by_series,
    lambda_coeff,
)
from src.sequences.stirling import stirling1, stirling1_unsigned, stirling2

from . import IdentityId, IdentityReport
from .registry import IdentitySweep, register_checker, require_bound


@register_checker(IdentityId.T1, "max_n")
def check_t1(max_n: int) -> IdentityReport:
    """B_n(X) = B_n + sum_{k=1}^{n} (n/k) S(n-1,k-1) X<k>"""
    require_bound("max_n", max_n)
    sweep = IdentitySweep(IdentityId.T1, f"0 <= n <= {max_n}", {"max_n": max_n})

    def points():
        for n in range(max_n + 1):
            coeffs = [bernoulli_first(n)] + [Fraction(n, k) * stirling2(n - 1, k - 1) for k in range(1, n + 1)]
            rhs = Polynomial.falling(coeffs).to_monomial()
            yield {"n": n}, bernoulli_polynomial(n), rhs

    return sweep.run(points())


@register_checker(IdentityId.C1, "max_n")
def check_c1(max_n: int) -> IdentityReport:
    """B_n = - sum_{k=1}^{n} (n/k) S(n-1,k-1) B_k*"""
    require_bound("max_n", max_n)
    sweep = IdentitySweep(IdentityId.C1, f"1 <= n <= {max_n}", {"max_n": max_n})
    b = bernoulli_first_by_recurrence(max_n)

    def points():
        for n in range(1, max_n + 1):
            rhs = -sum((Fraction(n, k) * stirling2(n - 1, k - 1) * bernoulli_second(k) for k in range(1, n + 1)), Fraction(0))
            yield {"n": n}, b[n], rhs

    return sweep.run(points())


@register_checker(IdentityId.T2, "max_n")
def check_t2(max_n: int) -> IdentityReport:
    """B_n* = - sum_{k=1}^{n} (n/k) s(n-1,k-1) B_k"""
    require_bound("max_n", max_n)
    sweep = IdentitySweep(IdentityId.T2, f"1 <= n <= {max_n}", {"max_n": max_n})
    b_star = bernoulli_second_by_series(max_n)

    def points():
        for n in range(1, max_n + 1):
            rhs = -sum((Fraction(n, k) * stirling1(n - 1, k - 1) * bernoulli_first(k) for k in range(1, n + 1)), Fraction(0))
            yield {"n": n}, b_star[n], rhs

    return sweep.run(points())


@register_checker(IdentityId.T3, "max_n")
def check_t3(max_n: int) -> IdentityReport:
    """X<n> = B_n* + sum_{k=1}^{n} (n/k) s(n-1,k-1) B_k(X)，两边都在单项式基下比较"""
    require_bound("max_n", max_n)
    sweep = IdentitySweep(IdentityId.T3, f"0 <= n <= {max_n}", {"max_n": max_n})
    b_star = bernoulli_second_by_series(max_n)

    def points():
        for n in range(max_n + 1):
            rhs = Polynomial.constant(b_star[n])
            for k in range(1, n + 1):
                rhs = rhs + bernoulli_polynomial(k).scale(Fraction(n, k) * stirling1(n - 1, k - 1))
            yield {"n": n}, Polynomial.falling_factorial(n).to_monomial(), rhs

    return sweep.run(points())


def alternating_stirling_sum(n: int) -> Fraction:
    """sum_i (-1)^i i!/(i+1) S(n,i)，在检查器内独立展开"""
    return sum((Fraction((-1) ** i * math.factorial(i), i + 1) * stirling2(n, i) for i in range(n + 1)), Fraction(0))


@register_checker(IdentityId.C3, "max_n")
def check_c3(max_n: int) -> IdentityReport:
    """
    B_n = sum_i (-1)^i i!/(i+1) S(n,i)

    该求和就是 B_n 的主路径，所以这里与递推（route = 1）和指数生成函数（route = 2）比较。
    """
    require_bound("max_n", max_n)
    sweep = IdentitySweep(IdentityId.C3, f"0 <= n <= {max_n}", {"max_n": max_n})
    by_recurrence = bernoulli_first_by_recurrence(max_n)
    by_egf = bernoulli_first_by_egf(max_n)

    def points():
        for n in range(max_n + 1):
            value = alternating_stirling_sum(n)
            yield {"n": n, "route": 1}, value, by_recurrence[n]
            yield {"n": n, "route": 2}, value, by_egf[n]

    return sweep.run(points())


@register_checker(IdentityId.C6, "max_n")
def check_c6(max_n: int) -> IdentityReport:
    """
    B_n* = sum_i s(n,i)/(i+1)

    与积分路径（route = 1）和 t/log(1+t) 的系数（route = 2）比较。
    """
    require_bound("max_n", max_n)
    sweep = IdentitySweep(IdentityId.C6, f"0 <= n <= {max_n}", {"max_n": max_n})
    by_series = bernoulli_second_by_series(max_n)

    def points():
        for n in range(max_n + 1):
            value = sum((Fraction(stirling1(n, i), i + 1) for i in range(n + 1)), Fraction(0))
            yield {"n": n, "route": 1}, value, bernoulli_second(n)
            yield {"n": n, "route": 2}, value, by_series[n]

    return sweep.run(points())


@register_checker(IdentityId.EQ13_INT_FALLING, "max_n")
def check_eq13(max_n: int) -> IdentityReport:
    """∫_0^1 x<n> dx = B_n*（右边取 t/log(1+t) 的系数）"""
    require_bound("max_n", max_n)
    sweep = IdentitySweep(IdentityId.EQ13_INT_FALLING, f"0 <= n <= {max_n}", {"max_n": max_n})
    by_series = bernoulli_second_by_series(max_n)

    def points():
        for n in range(max_n + 1):
            yield {"n": n}, poly_integrate_01(Polynomial.falling_factorial(n)), by_series[n]

    return sweep.run(points())


def bernoulli_polynomial_by_antidifference(n: int) -> Polynomial:
    """
    不经过 B_k 直接构造 B_n(X)

    n >= 1 时 B_n(X) 是满足 ΔB_n(X) = n X^{n-1} 且 ∫_0^1 B_n = 0 的唯一多项式；
    反差分走下降阶乘基，与二项式展开无关。
    """
    if n == 0:
        return Polynomial.constant(1)
    q = op_delta_inv(Polynomial.x_power(n - 1)).scale(n)
    return q - Polynomial.constant(poly_integrate_01(q))


@register_checker(IdentityId.EQ14_BERN_EXPANSION, "max_n")
def check_eq14(max_n: int) -> IdentityReport:
    """
    B_n(X) = sum_k C(n,k) B_{n-k} X^k

    form = 1 与反差分构造比较；form = 2 逐阶比较 Taylor 系数 B_n^{(k)}(0) = n<k> B_{n-k}。
    """
    require_bound("max_n", max_n)
    sweep = IdentitySweep(IdentityId.EQ14_BERN_EXPANSION, f"0 <= k <= n <= {max_n}", {"max_n": max_n})

    def points():
        for n in range(max_n + 1):
            expansion = bernoulli_polynomial(n)
            yield {"n": n, "form": 1}, expansion, bernoulli_polynomial_by_antidifference(n)
            derivative = expansion
            for k in range(n + 1):
                yield {"n": n, "k": k, "form": 2}, poly_eval(derivative, 0), bernoulli_polynomial_derivative_at_zero(n, k)
                derivative = op_diff(derivative)

    return sweep.run(points())


def remark_series_coefficients(order: int) -> Tuple[Fraction, ...]:
    """t/((1+t)log(1+t)) 的前 order 个系数"""
    return series_div(series_geom(order), series_log1p(order + 1).shift_down()).coeffs


@register_checker(IdentityId.C5_REMARK_SERIES, "order")
def check_c5_remark(order: int) -> IdentityReport:
    """[t^m] t/((1+t)log(1+t)) = (-1)^m sum_{l=0}^{m} (-1)^l B_l*/l!"""
    require_bound("order", order, lower=2)
    sweep = IdentitySweep(IdentityId.C5_REMARK_SERIES, f"0 <= m < {order}", {"order": order})
    coefficients = remark_series_coefficients(order)

    def points():
        partial = Fraction(0)
        for m in range(order):
            partial += Fraction((-1) ** m, math.factorial(m)) * bernoulli_second(m)
            yield {"m": m}, coefficients[m], (-1) ** m * partial

    return sweep.run(points())


def t5_coefficients(r: int) -> Tuple[Fraction, ...]:
    """T5 右边 B_{n+k} 的系数 |s(r,k+1)|/(r-1)!，k = 0..r-1"""
    require_bound("r", r)
    return tuple(Fraction(stirling1_unsigned(r, k + 1), math.factorial(r - 1)) for k in range(r))


def t5_lhs(r: int, n: int) -> Fraction:
    return sum((Fraction((-1) ** k * math.factorial(k), k + r) * stirling2(n, k) for k in range(n + 1)), Fraction(0))


@register_checker(IdentityId.T5, "max_r", "max_n")
def check_t5(max_r: int, max_n: int) -> IdentityReport:
    """sum_k (-1)^k k!/(k+r) S(n,k) = 1/(r-1)! sum_{k<r} |s(r,k+1)| B_{n+k}（B 取递推值）"""
    require_bound("max_r", max_r)
    require_bound("max_n", max_n)
    sweep = IdentitySweep(IdentityId.T5, f"1 <= r <= {max_r}, 0 <= n <= {max_n}", {"max_r": max_r, "max_n": max_n})
    if max_r >= 2:
        sweep.note("r = 2 is checked in the general form with the S(n,k) factor; the short form without it is not used")
    b = bernoulli_first_by_recurrence(max_n + max_r - 1)

    def points():
        for r in range(1, max_r + 1):
            coefficients = t5_coefficients(r)
            for n in range(max_n + 1):
                rhs = sum((c * b[n + k] for k, c in enumerate(coefficients)), Fraction(0))
                yield {"r": r, "n": n}, t5_lhs(r, n), rhs

    return sweep.run(points())


def t6_lhs(r: int, n: int) -> Fraction:
    return sum((Fraction(stirling1(n, k), k + r) for k in range(n + 1)), Fraction(0))


@register_checker(IdentityId.T6, "max_r", "max_n")
def check_t6(max_r: int, max_n: int) -> IdentityReport:
    """
    sum_k s(n,k)/(k+r) = sum_{k<r} λ_{r,n,k} B_{n+k}*（B* 取级数值）

    form = 1 另外比较 ∫_0^1 x<n> x^{r-1} dx 与左边。
    """
    require_bound("max_r", max_r)
    require_bound("max_n", max_n)
    sweep = IdentitySweep(IdentityId.T6, f"1 <= r <= {max_r}, 0 <= n <= {max_n}", {"max_r": max_r, "max_n": max_n})
    b_star = bernoulli_second_by_series(max_n + max_r - 1)

    def points():
        for r in range(1, max_r + 1):
            weight = Polynomial.x_power(r - 1)
            for n in range(max_n + 1):
                lhs = t6_lhs(r, n)
                rhs = sum((lambda_coeff(r, n, k) * b_star[n + k] for k in range(r)), Fraction(0))
                yield {"r": r, "n": n}, lhs, rhs
                integral = poly_integrate_01(Polynomial.falling_factorial(n) * weight)
                yield {"r": r, "n": n, "form": 1}, integral, lhs

    return sweep.run(points())
