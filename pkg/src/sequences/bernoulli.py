"""Bernoulli 数（两类）与 Bernoulli 多项式

第一类 B_n 的主路径：
    B_n = sum_i (-1)^i i!/(i+1) S(n,i)
校验路径：
    递推 sum_{k=0}^{n-1} C(n,k) B_k = 0 (n >= 2)，以及 t/(e^t - 1) 的指数生成函数

第二类 B_n* 的主路径：
    B_n* = ∫_0^1 x<n> dx
校验路径：
    t/log(1+t) 的指数生成函数，以及 sum_i s(n,i)/(i+1)

约定 B_1 = -1/2（即 B_n = B_n(0)）；B_n* 采用不除以 n! 的归一化。
"""

import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Tuple

from src.exact_arith import DomainError, ExactRational, binomial, check_index, falling_factorial_int
from src.logger import get_logger
from src.polynomials.operators import poly_integrate_01
from src.polynomials.polynomial import Polynomial
from src.polynomials.power_series import PowerSeries, series_div, series_log1p

from . import BernoulliKind, StirlingKind
from .stirling import stirling1, stirling2, stirling_row

logger = get_logger("Sequences")


def _first_kind_term(n: int) -> Fraction:
    return sum(
        (Fraction((-1) ** i * math.factorial(i), i + 1) * s for i, s in enumerate(stirling_row(StirlingKind.SECOND, n))),
        Fraction(0),
    )


def _second_kind_term(n: int) -> Fraction:
    return poly_integrate_01(Polynomial.falling_factorial(n))


_PRIMARY_ROUTES: Dict[BernoulliKind, Callable[[int], Fraction]] = {
    BernoulliKind.FIRST: _first_kind_term,
    BernoulliKind.SECOND: _second_kind_term,
}


class BernoulliCache:
    """
    只增不减的 Bernoulli 数缓存

    values[n] 由该种类的主路径逐个算出；扩展在锁内串行，读取已有前缀不加锁。
    """

    def __init__(self, kind: BernoulliKind):
        self.kind = kind
        self._route = _PRIMARY_ROUTES[kind]
        self._values: List[Fraction] = []
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def ensure(self, n: int) -> None:
        if n < len(self._values):
            return
        with self._lock:
            start = len(self._values)
            for m in range(start, n + 1):
                self._values.append(self._route(m))
            if n >= start:
                logger.debug(f"{self.kind} 缓存扩展到 n = {n}")

    def get(self, n: int) -> ExactRational:
        check_index("n", n)
        self.ensure(n)
        return self._values[n]

    def prefix(self, n: int) -> Tuple[Fraction, ...]:
        """values[0..n]"""
        check_index("n", n)
        self.ensure(n)
        return tuple(self._values[: n + 1])


_caches: Dict[BernoulliKind, BernoulliCache] = {kind: BernoulliCache(kind) for kind in BernoulliKind}


def bernoulli_cache(kind: BernoulliKind) -> BernoulliCache:
    return _caches[kind]


def bernoulli_first(n: int) -> ExactRational:
    """第一类 Bernoulli 数 B_n（B_1 = -1/2）"""
    return _caches[BernoulliKind.FIRST].get(n)


def bernoulli_second(n: int) -> ExactRational:
    """第二类 Bernoulli 数 B_n* = ∫_0^1 x<n> dx"""
    return _caches[BernoulliKind.SECOND].get(n)


@lru_cache(maxsize=None)
def bernoulli_polynomial(n: int) -> Polynomial:
    """B_n(X) = sum_k C(n,k) B_{n-k} X^k（单项式基，首项系数为 1）"""
    check_index("n", n)
    return Polynomial.monomial([binomial(n, k) * bernoulli_first(n - k) for k in range(n + 1)])


def bernoulli_polynomial_derivative_at_zero(n: int, k: int) -> ExactRational:
    """B_n^{(k)}(0) = n<k> B_{n-k}；k > n 时为 0"""
    check_index("n", n)
    check_index("k", k)
    if k > n:
        return Fraction(0)
    return falling_factorial_int(n, k) * bernoulli_first(n - k)


# ============ 独立校验路径 ============


def bernoulli_first_by_recurrence(max_n: int) -> Tuple[Fraction, ...]:
    """
    由 ΔB_n(X) = n X^{n-1} 在 X = 0 处取值得到的递推

    B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k   (m >= 1)
    """
    check_index("max_n", max_n)
    values = [Fraction(1)]
    for m in range(1, max_n + 1):
        acc = sum((math.comb(m + 1, k) * values[k] for k in range(m)), Fraction(0))
        values.append(-acc / (m + 1))
    return tuple(values)


def bernoulli_first_by_egf(max_n: int) -> Tuple[Fraction, ...]:
    """t/(e^t - 1) 的系数乘 n!；分母 (e^t - 1)/t = sum_j t^j/(j+1)!"""
    check_index("max_n", max_n)
    order = max_n + 1
    den = PowerSeries(order, tuple(Fraction(1, math.factorial(j + 1)) for j in range(order)))
    return series_div(PowerSeries.one(order), den).egf_values()


def bernoulli_second_by_series(max_n: int) -> Tuple[Fraction, ...]:
    """t/log(1+t) 的系数乘 n!；先把 log(1+t) 约去一个 t"""
    check_index("max_n", max_n)
    order = max_n + 1
    den = series_log1p(order + 1).shift_down()
    return series_div(PowerSeries.one(order), den).egf_values()


def bernoulli_second_by_stirling(n: int) -> ExactRational:
    """B_n* = sum_i s(n,i)/(i+1)"""
    check_index("n", n)
    return sum((Fraction(stirling1(n, i), i + 1) for i in range(n + 1)), Fraction(0))


def lambda_coeff(r: int, n: int, k: int) -> ExactRational:
    """
    λ_{r,n,k} = sum_{l=0}^{r-1-k} C(r-1,l) S(r-1-l,k) n^l

    要求 r >= 1 且 0 <= k <= r-1，结果总是整数。
    """
    check_index("r", r, lower=1)
    check_index("n", n)
    if isinstance(k, bool) or not isinstance(k, int) or not 0 <= k <= r - 1:
        raise DomainError(f"k 必须满足 0 <= k <= r-1 = {r - 1}，收到 {k}")
    return Fraction(sum(math.comb(r - 1, ell) * stirling2(r - 1 - ell, k) * n**ell for ell in range(r - k)))
