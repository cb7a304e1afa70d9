"""多项式上的线性算子：D、Δ、τ_r、Δ^{-1}、D^{-1} 以及 [0,1] 上的定积分

Δ^{-1} 与 D^{-1} 本来只确定到一个加性常数，这里统一取在 0 处为零的那个。
"""

import math
from fractions import Fraction

from src.exact_arith import RationalLike, check_index, to_rational

from . import Basis
from .polynomial import Polynomial, poly_convert
from .power_series import PowerSeries


def op_diff(p: Polynomial) -> Polynomial:
    """导数 D（单项式基）"""
    a = p.to_monomial().coeffs
    return Polynomial(Basis.MONOMIAL, tuple(i * a[i] for i in range(1, len(a))))


def op_translate(p: Polynomial, r: RationalLike) -> Polynomial:
    """平移 τ_r：返回 p(X + r) 的单项式系数"""
    r = to_rational(r)
    a = p.to_monomial().coeffs
    if r == 0:
        return Polynomial(Basis.MONOMIAL, a)
    out = [Fraction(0)] * len(a)
    for i, c in enumerate(a):
        if c == 0:
            continue
        # (X + r)^i = sum_j C(i,j) r^{i-j} X^j
        for j in range(i + 1):
            out[j] += c * math.comb(i, j) * r ** (i - j)
    return Polynomial(Basis.MONOMIAL, tuple(out))


def op_delta(p: Polynomial) -> Polynomial:
    """
    前向差分 Δ = τ_1 - I，保持输入的基

    下降阶乘基逐项用 Δ X<n> = n X<n-1>；单项式基按 p(X+1) - p(X) 计算。
    两条路径互不依赖，可以相互校验。
    """
    if p.basis is Basis.FALLING_FACTORIAL:
        b = p.coeffs
        return Polynomial(Basis.FALLING_FACTORIAL, tuple(k * b[k] for k in range(1, len(b))))
    return op_translate(p, 1) - p


def op_delta_power(p: Polynomial, k: int) -> Polynomial:
    """Δ^k"""
    check_index("k", k)
    for _ in range(k):
        if p.is_zero:
            break
        p = op_delta(p)
    return p


def op_delta_inv(p: Polynomial) -> Polynomial:
    """
    反差分 Δ^{-1}，结果在 0 处为零，保持输入的基

    Δ^{-1} X<n> = X<n+1>/(n+1)；单项式基先换到下降阶乘基再换回来。
    """
    b = p.to_falling().coeffs
    q = Polynomial(Basis.FALLING_FACTORIAL, (0,) + tuple(c / (k + 1) for k, c in enumerate(b)))
    return poly_convert(q, p.basis)


def poly_antiderivative(p: Polynomial) -> Polynomial:
    """原函数 D^{-1}（单项式基），结果在 0 处为零"""
    a = p.to_monomial().coeffs
    if not a:
        return Polynomial.zero()
    return Polynomial(Basis.MONOMIAL, (0,) + tuple(c / (i + 1) for i, c in enumerate(a)))


def poly_integrate_01(p: Polynomial) -> Fraction:
    """[0,1] 上的定积分"""
    return sum((c / (i + 1) for i, c in enumerate(p.to_monomial().coeffs)), Fraction(0))


def apply_delta_series(series: PowerSeries, p: Polynomial) -> Polynomial:
    """
    f(Δ) p = sum_k c_k Δ^k p，其中 f 为截断幂级数

    Δ 在多项式上幂零（次数为 d 时 Δ^{d+1} p = 0），所以只需前 d+1 项；
    级数阶数不够时报错而不是静默截断。结果与 p 同基。
    """
    if p.is_zero:
        return p
    needed = p.degree + 1
    if series.order < needed:
        raise ValueError(f"级数阶数 {series.order} 不足以作用于 {p.degree} 次多项式（至少需要 {needed}）")
    result = Polynomial.zero(p.basis)
    term = p
    for k in range(needed):
        if series.coeffs[k] != 0:
            result = result + term.scale(series.coeffs[k])
        term = op_delta(term)
    return result
