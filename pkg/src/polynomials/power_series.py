"""截断形式幂级数

PowerSeries 精确保存 order 个系数（t^0 .. t^{order-1}），运算从不读取截断之外的项；
乘除结果的 order 取两个操作数的较小者。阶数由调用方决定，不会自动延长。
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from src.exact_arith import ExactDivisionError, RationalLike, check_index, to_rational


@dataclass(frozen=True)
class PowerSeries:
    order: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        check_index("order", self.order)
        values = tuple(to_rational(c) for c in self.coeffs)
        if len(values) != self.order:
            raise ValueError(f"系数个数 {len(values)} 与截断阶 {self.order} 不一致")
        object.__setattr__(self, "coeffs", values)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        check_index("order", order, lower=1)
        return cls(order, (1,) + (0,) * (order - 1))

    def coefficient(self, n: int) -> Fraction:
        check_index("n", n)
        if n >= self.order:
            raise IndexError(f"t^{n} 超出截断阶 {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "PowerSeries":
        check_index("order", order)
        if order > self.order:
            raise ValueError(f"无法把 {self.order} 阶级数延长到 {order} 阶")
        return PowerSeries(order, self.coeffs[:order])

    def shift_down(self) -> "PowerSeries":
        """除以 t；要求常数项为零，结果少一阶"""
        if self.order == 0 or self.coeffs[0] != 0:
            raise ValueError("只有常数项为零的级数才能除以 t")
        return PowerSeries(self.order - 1, self.coeffs[1:])

    def egf_values(self) -> Tuple[Fraction, ...]:
        """把指数生成函数的系数还原为数列：a_n = n! [t^n]"""
        return tuple(c * math.factorial(n) for n, c in enumerate(self.coeffs))

    def scale(self, factor: RationalLike) -> "PowerSeries":
        factor = to_rational(factor)
        return PowerSeries(self.order, tuple(factor * c for c in self.coeffs))

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return PowerSeries(order, tuple(self.coeffs[i] + other.coeffs[i] for i in range(order)))

    def __neg__(self) -> "PowerSeries":
        return self.scale(-1)

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return series_mul(self, other)

    def __truediv__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return series_div(self, other)


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    order = min(a.order, b.order)
    out = [Fraction(0)] * order
    for i in range(order):
        if a.coeffs[i] == 0:
            continue
        for j in range(order - i):
            out[i + j] += a.coeffs[i] * b.coeffs[j]
    return PowerSeries(order, tuple(out))


def series_div(num: PowerSeries, den: PowerSeries) -> PowerSeries:
    """
    截断商 q，使 q * den = num（在共同阶内）

    逐项长除：q_n = (num_n - sum_{j=1}^{n} den_j q_{n-j}) / den_0
    """
    order = min(num.order, den.order)
    if den.order == 0 or den.coeffs[0] == 0:
        raise ExactDivisionError("除数级数的常数项为零")
    lead = den.coeffs[0]
    q: list[Fraction] = []
    for n in range(order):
        acc = num.coeffs[n]
        for j in range(1, n + 1):
            acc -= den.coeffs[j] * q[n - j]
        q.append(acc / lead)
    return PowerSeries(order, tuple(q))


def series_log1p(order: int) -> PowerSeries:
    """log(1+t) = sum_{k>=1} (-1)^{k-1} t^k / k"""
    check_index("order", order, lower=1)
    return PowerSeries(order, (0,) + tuple(Fraction((-1) ** (k - 1), k) for k in range(1, order)))


def series_geom(order: int) -> PowerSeries:
    """1/(1+t) = sum_k (-1)^k t^k"""
    check_index("order", order, lower=1)
    return PowerSeries(order, tuple((-1) ** k for k in range(order)))


def series_exp(order: int) -> PowerSeries:
    """e^t = sum_k t^k / k!"""
    check_index("order", order, lower=1)
    return PowerSeries(order, tuple(Fraction(1, math.factorial(k)) for k in range(order)))
