"""算子公式：Δ、D、Δ^{-1} 作用于下降阶乘、幂和 Bernoulli 多项式，以及上升阶乘展开"""

from fractions import Fraction
from typing import Tuple

from src.exact_arith import rising_factorial_int
from src.polynomials.operators import op_delta, op_delta_inv, op_diff, poly_integrate_01
from src.polynomials.polynomial import Polynomial
from src.sequences.bernoulli import bernoulli_first, bernoulli_polynomial
from src.sequences.stirling import stirling1_unsigned

from . import IdentityId, IdentityReport
from .registry import IdentitySweep, register_checker, require_bound


# 上升阶乘逐点比较时使用的整数点，包含负数和零
SAMPLE_POINTS = (-3, -1, 0, 2, 5)


def _sweep(identity_id: IdentityId, lower: int, max_n: int) -> IdentitySweep:
    require_bound("max_n", max_n)
    return IdentitySweep(identity_id, f"{lower} <= n <= {max_n}", {"max_n": max_n})


@register_checker(IdentityId.EQ9_DELTA_FALLING, "max_n")
def check_eq9(max_n: int) -> IdentityReport:
    """
    Δ X<n> = n X<n-1>

    form = 1 在下降阶乘基下逐项计算；form = 2 在单项式基下按 p(X+1) - p(X) 计算。
    """
    sweep = _sweep(IdentityId.EQ9_DELTA_FALLING, 1, max_n)

    def points():
        for n in range(1, max_n + 1):
            expected = Polynomial.falling_factorial(n - 1).scale(n)
            yield {"n": n, "form": 1}, op_delta(Polynomial.falling_factorial(n)), expected
            yield {"n": n, "form": 2}, op_delta(Polynomial.falling_factorial(n).to_monomial()), expected.to_monomial()

    return sweep.run(points())


@register_checker(IdentityId.EQ10_DELTA_BERN, "max_n")
def check_eq10(max_n: int) -> IdentityReport:
    """Δ B_n(X) = n X^{n-1}"""
    sweep = _sweep(IdentityId.EQ10_DELTA_BERN, 1, max_n)

    def points():
        for n in range(1, max_n + 1):
            yield {"n": n}, op_delta(bernoulli_polynomial(n)), Polynomial.x_power(n - 1).scale(n)

    return sweep.run(points())


@register_checker(IdentityId.EQ11_DIFF_BERN, "max_n")
def check_eq11(max_n: int) -> IdentityReport:
    """B_n'(X) = n B_{n-1}(X)"""
    sweep = _sweep(IdentityId.EQ11_DIFF_BERN, 1, max_n)

    def points():
        for n in range(1, max_n + 1):
            yield {"n": n}, op_diff(bernoulli_polynomial(n)), bernoulli_polynomial(n - 1).scale(n)

    return sweep.run(points())


@register_checker(IdentityId.EQ12_INT_BERN, "max_n")
def check_eq12(max_n: int) -> IdentityReport:
    """∫_0^1 B_n(x) dx = 0 (n >= 1)"""
    sweep = _sweep(IdentityId.EQ12_INT_BERN, 1, max_n)

    def points():
        for n in range(1, max_n + 1):
            yield {"n": n}, poly_integrate_01(bernoulli_polynomial(n)), Fraction(0)

    return sweep.run(points())


def rising_product(start: int, count: int) -> Polynomial:
    """(X + start)(X + start + 1)...(X + start + count - 1)，用多项式乘法展开"""
    result = Polynomial.constant(1)
    for j in range(start, start + count):
        result = result * Polynomial.monomial([j, 1])
    return result


@register_checker(IdentityId.EQ17_RISING, "max_n")
def check_eq17(max_n: int) -> IdentityReport:
    """
    X(X+1)...(X+n-1) = sum_k |s(n,k)| X^k

    form = 2 在若干整数点上把右边的值与 rising_factorial_int 比较。
    """
    sweep = _sweep(IdentityId.EQ17_RISING, 0, max_n)

    def points():
        for n in range(max_n + 1):
            rhs = Polynomial.monomial([stirling1_unsigned(n, k) for k in range(n + 1)])
            yield {"n": n}, rising_product(0, n), rhs
            for x in SAMPLE_POINTS:
                yield {"n": n, "x": x, "form": 2}, rhs(x), rising_factorial_int(x, n)

    return sweep.run(points())


@register_checker(IdentityId.EQ18_RISING_SHIFTED, "max_n")
def check_eq18(max_n: int) -> IdentityReport:
    """
    (X+1)(X+2)...(X+n-1) = sum_{k<n} |s(n,k+1)| X^k

    form = 2 在若干整数点上把右边的值与 rising_factorial_int(x+1, n-1) 比较。
    """
    sweep = _sweep(IdentityId.EQ18_RISING_SHIFTED, 1, max_n)

    def points():
        for n in range(1, max_n + 1):
            rhs = Polynomial.monomial([stirling1_unsigned(n, k + 1) for k in range(n)])
            yield {"n": n}, rising_product(1, n - 1), rhs
            for x in SAMPLE_POINTS:
                yield {"n": n, "x": x, "form": 2}, rhs(x), rising_factorial_int(x + 1, n - 1)

    return sweep.run(points())


@register_checker(IdentityId.EQ19_DELTAINV_FALLING, "max_n")
def check_eq19(max_n: int) -> IdentityReport:
    """Δ^{-1} X<n> = X<n+1>/(n+1)，两边都取在 0 处为零的代表"""
    sweep = _sweep(IdentityId.EQ19_DELTAINV_FALLING, 0, max_n)

    def points():
        for n in range(max_n + 1):
            expected = Polynomial.falling_factorial(n + 1).scale(Fraction(1, n + 1))
            yield {"n": n}, op_delta_inv(Polynomial.falling_factorial(n)), expected

    return sweep.run(points())


@register_checker(IdentityId.EQ20_DELTAINV_MONOMIAL, "max_n")
def check_eq20(max_n: int) -> IdentityReport:
    """Δ^{-1} X^n = (B_{n+1}(X) - B_{n+1})/(n+1)"""
    sweep = _sweep(IdentityId.EQ20_DELTAINV_MONOMIAL, 0, max_n)

    def points():
        for n in range(max_n + 1):
            pinned = bernoulli_polynomial(n + 1) - Polynomial.constant(bernoulli_first(n + 1))
            yield {"n": n}, op_delta_inv(Polynomial.x_power(n)), pinned.scale(Fraction(1, n + 1))

    return sweep.run(points())


def check_operator_formulas(max_n: int) -> Tuple[IdentityReport, ...]:
    """依次校验 Δ / D / Δ^{-1} 的各条算子公式与上升阶乘展开，每条公式一份报告"""
    return (
        check_eq9(max_n),
        check_eq10(max_n),
        check_eq11(max_n),
        check_eq12(max_n),
        check_eq17(max_n),
        check_eq18(max_n),
        check_eq19(max_n),
        check_eq20(max_n),
    )
