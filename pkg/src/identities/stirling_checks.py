"""Stirling 三角相关的恒等式：正交关系、反演引理，以及两类 Stirling 数交叉求和的闭式"""

import math
import random
from fractions import Fraction
from typing import List

from src.exact_arith import binomial, kronecker_delta
from src.polynomials.operators import apply_delta_series, op_delta_inv, poly_antiderivative
from src.polynomials.polynomial import Polynomial
from src.polynomials.power_series import PowerSeries, series_div, series_geom, series_log1p
from src.sequences.bernoulli import bernoulli_first_by_recurrence, bernoulli_second, bernoulli_second_by_series
from src.sequences.stirling import stirling1, stirling2

from . import IdentityId, IdentityReport
from .registry import IdentitySweep, register_checker, require_bound


@register_checker(IdentityId.EQ5_ORTHO, "max_n")
def check_eq5(max_n: int) -> IdentityReport:
    """sum_{m<=i<=n} s(n,i) S(i,m) = δ_nm"""
    require_bound("max_n", max_n)
    sweep = IdentitySweep(IdentityId.EQ5_ORTHO, f"0 <= m <= n <= {max_n}", {"max_n": max_n})

    def points():
        for n in range(max_n + 1):
            for m in range(n + 1):
                lhs = sum(stirling1(n, i) * stirling2(i, m) for i in range(m, n + 1))
                yield {"n": n, "m": m}, lhs, kronecker_delta(n, m)

    return sweep.run(points())


@register_checker(IdentityId.EQ6_ORTHO, "max_n")
def check_eq6(max_n: int) -> IdentityReport:
    """sum_{m<=i<=n} S(n,i) s(i,m) = δ_nm"""
    require_bound("max_n", max_n)
    sweep = IdentitySweep(IdentityId.EQ6_ORTHO, f"0 <= m <= n <= {max_n}", {"max_n": max_n})

    def points():
        for n in range(max_n + 1):
            for m in range(n + 1):
                lhs = sum(stirling2(n, i) * stirling1(i, m) for i in range(m, n + 1))
                yield {"n": n, "m": m}, lhs, kronecker_delta(n, m)

    return sweep.run(points())


def _random_sequence(rng: random.Random, length: int, bound: int) -> List[Fraction]:
    return [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(length)]


def _transform_first(v: List[Fraction]) -> List[Fraction]:
    """形式 (I)：u_n = sum_k s(n,k) v_k"""
    return [sum((stirling1(n, k) * v[k] for k in range(n + 1)), Fraction(0)) for n in range(len(v))]


def _transform_second(u: List[Fraction]) -> List[Fraction]:
    """形式 (II)：v_n = sum_k S(n,k) u_k"""
    return [sum((stirling2(n, k) * u[k] for k in range(n + 1)), Fraction(0)) for n in range(len(u))]


@register_checker(IdentityId.L1_INVERSION, "trials", "max_n", "seed", "value_bound")
def check_l1_inversion(trials: int, max_n: int, seed: int = 0, value_bound: int = 1000) -> IdentityReport:
    """
    反演引理：形式 (I) 与 (II) 互逆

    每次试验随机生成 v_0..v_max_n，经 (I) 得到 u 再经 (II) 还原；反方向同理。
    form = 1 表示 v -> u -> v，form = 2 表示 u -> v -> u。
    """
    require_bound("trials", trials)
    require_bound("max_n", max_n)
    require_bound("value_bound", value_bound)
    sweep = IdentitySweep(
        IdentityId.L1_INVERSION,
        f"{trials} trials, 0 <= n <= {max_n}, seed {seed}",
        {"trials": trials, "max_n": max_n, "seed": seed, "value_bound": value_bound},
    )
    rng = random.Random(seed)

    def points():
        for trial in range(trials):
            v = _random_sequence(rng, max_n + 1, value_bound)
            recovered = _transform_second(_transform_first(v))
            for n in range(max_n + 1):
                yield {"trial": trial, "form": 1, "n": n}, recovered[n], v[n]
            u = _random_sequence(rng, max_n + 1, value_bound)
            recovered = _transform_first(_transform_second(u))
            for n in range(max_n + 1):
                yield {"trial": trial, "form": 2, "n": n}, recovered[n], u[n]

    return sweep.run(points())


def _index_range(k: int, n: int, full_index_range: bool) -> range:
    # 当 i < k 时 s(i,k) = S(i,k) = 0，因此从 1 开始求和结果不变
    return range(1 if full_index_range else k, n + 1)


def _range_note(sweep: IdentitySweep, full_index_range: bool) -> None:
    if full_index_range:
        sweep.note("sum index i runs over 1..n instead of k..n")


@register_checker(IdentityId.C2, "max_n")
def check_c2(max_n: int, full_index_range: bool = False) -> IdentityReport:
    """sum_{k<=i<=n} S(n-1,i-1) s(i,k)/i = C(n,k) B_{n-k} / n"""
    require_bound("max_n", max_n)
    sweep = IdentitySweep(IdentityId.C2, f"1 <= k <= n <= {max_n}", {"max_n": max_n})
    _range_note(sweep, full_index_range)
    b = bernoulli_first_by_recurrence(max_n)

    def points():
        for n in range(1, max_n + 1):
            for k in range(1, n + 1):
                lhs = sum(
                    (Fraction(stirling2(n - 1, i - 1) * stirling1(i, k), i) for i in _index_range(k, n, full_index_range)),
                    Fraction(0),
                )
                yield {"n": n, "k": k}, lhs, Fraction(binomial(n, k), n) * b[n - k]

    return sweep.run(points())


@register_checker(IdentityId.C4, "max_n")
def check_c4(max_n: int, full_index_range: bool = False) -> IdentityReport:
    """sum_{k<=i<=n} S(n,i) s(i,k)/i = C(n,k) B_{n-k} / n + δ_{n-1,k}"""
    require_bound("max_n", max_n)
    sweep = IdentitySweep(IdentityId.C4, f"1 <= k <= n <= {max_n}", {"max_n": max_n})
    _range_note(sweep, full_index_range)
    b = bernoulli_first_by_recurrence(max_n)

    def points():
        for n in range(1, max_n + 1):
            for k in range(1, n + 1):
                lhs = sum(
                    (Fraction(stirling2(n, i) * stirling1(i, k), i) for i in _index_range(k, n, full_index_range)),
                    Fraction(0),
                )
                rhs = Fraction(binomial(n, k), n) * b[n - k] + kronecker_delta(n - 1, k)
                yield {"n": n, "k": k}, lhs, rhs

    return sweep.run(points())


def _t4_double_sum(n: int, k: int, full_index_range: bool) -> Fraction:
    return sum(
        (Fraction(stirling1(n - 1, i - 1) * stirling2(i, k), i) for i in _index_range(k, n, full_index_range)),
        Fraction(0),
    )


def inverse_derivative_series(order: int, b_star: tuple) -> PowerSeries:
    """D^{-1} - Δ^{-1} 作为 Δ 的幂级数：sum_k B_{k+1}* Δ^k / (k+1)!"""
    return PowerSeries(order, tuple(Fraction(b_star[k + 1], math.factorial(k + 1)) for k in range(order)))


@register_checker(IdentityId.T4, "max_n")
def check_t4(max_n: int, full_index_range: bool = False) -> IdentityReport:
    """
    sum_{k<=i<=n} s(n-1,i-1) S(i,k)/i = C(n,k) B_{n-k}* / n

    同时按两种方式展开 ∫ x<n-1> dx 的下降阶乘系数（k >= 1，常数项不比较）：
    form = 1 直接逐项积分再换基，应等于左边的二重和；
    form = 2 用 D^{-1} = Δ^{-1} + sum_k B_{k+1}* Δ^k/(k+1)! 作用于 x<n-1>，应等于右边。
    """
    require_bound("max_n", max_n)
    sweep = IdentitySweep(IdentityId.T4, f"1 <= k <= n <= {max_n}", {"max_n": max_n})
    _range_note(sweep, full_index_range)
    b_star = bernoulli_second_by_series(max_n + 1)

    def points():
        for n in range(1, max_n + 1):
            base = Polynomial.falling_factorial(n - 1)
            integrated = poly_antiderivative(base).to_falling()
            operator_form = op_delta_inv(base) + apply_delta_series(inverse_derivative_series(n, b_star), base)
            for k in range(1, n + 1):
                lhs = _t4_double_sum(n, k, full_index_range)
                rhs = Fraction(binomial(n, k), n) * b_star[n - k]
                yield {"n": n, "k": k}, lhs, rhs
                yield {"n": n, "k": k, "form": 1}, integrated.coefficient(k), lhs
                yield {"n": n, "k": k, "form": 2}, operator_form.coefficient(k), rhs

    return sweep.run(points())


@register_checker(IdentityId.C5, "max_n")
def check_c5(max_n: int, full_index_range: bool = False) -> IdentityReport:
    """
    sum_{k<=i<=n} s(n,i) S(i,k)/i = (-1)^{n-k} (n-1)!/k! * sum_{l=0}^{n-k} (-1)^l B_l*/l!

    左边是 ∫ x<n>/x dx 的下降阶乘系数。form = 2 用算子级数重新计算它：
    Δ^{-1} [Δ/((1+Δ) log(1+Δ))] x<n-1>，取 x<k> 的系数（k >= 1）与左边比较。
    """
    require_bound("max_n", max_n)
    sweep = IdentitySweep(IdentityId.C5, f"1 <= k <= n <= {max_n}", {"max_n": max_n})
    _range_note(sweep, full_index_range)

    partial: List[Fraction] = []
    acc = Fraction(0)
    for ell in range(max_n):
        acc += Fraction((-1) ** ell, math.factorial(ell)) * bernoulli_second(ell)
        partial.append(acc)

    def points():
        for n in range(1, max_n + 1):
            kernel = series_div(series_geom(n), series_log1p(n + 1).shift_down())
            operator_form = op_delta_inv(apply_delta_series(kernel, Polynomial.falling_factorial(n - 1)))
            for k in range(1, n + 1):
                lhs = sum(
                    (Fraction(stirling1(n, i) * stirling2(i, k), i) for i in _index_range(k, n, full_index_range)),
                    Fraction(0),
                )
                rhs = (-1) ** (n - k) * Fraction(math.factorial(n - 1), math.factorial(k)) * partial[n - k]
                yield {"n": n, "k": k}, lhs, rhs
                yield {"n": n, "k": k, "form": 2}, operator_form.coefficient(k), lhs

    return sweep.run(points())
