"""精确整数 / 有理数运算

整数直接使用 Python 的任意精度 ``int``，有理数使用 ``fractions.Fraction``：
构造时即约分且分母恒为正，因此相等判断就是规范形式的结构相等。
"""

import math
from fractions import Fraction
from typing import Union

ExactInt = int
ExactRational = Fraction

RationalLike = Union[int, Fraction, str]


class DomainError(ValueError):
    """参数超出定义域（负下标、越界的 k 等）"""


class ExactDivisionError(ZeroDivisionError):
    """精确除零"""


def check_index(name: str, value: int, lower: int = 0) -> int:
    """校验非负整数下标；bool 不被当作整数"""
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} 必须是整数，收到 {type(value).__name__}")
    if value < lower:
        raise DomainError(f"{name} 必须 >= {lower}，收到 {value}")
    return value


def to_rational(value: RationalLike) -> ExactRational:
    """把 int / Fraction / "p/q" 字符串转换为规范有理数，拒绝浮点数"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError("bool 不是有理数")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise DomainError(f"不支持的标量类型: {type(value).__name__}")


def is_canonical(a: ExactRational) -> bool:
    return a.denominator > 0 and math.gcd(a.numerator, a.denominator) == 1


def rat_add(a: ExactRational, b: ExactRational) -> ExactRational:
    return to_rational(a) + to_rational(b)


def rat_sub(a: ExactRational, b: ExactRational) -> ExactRational:
    return to_rational(a) - to_rational(b)


def rat_mul(a: ExactRational, b: ExactRational) -> ExactRational:
    return to_rational(a) * to_rational(b)


def rat_neg(a: ExactRational) -> ExactRational:
    return -to_rational(a)


def rat_div(a: ExactRational, b: ExactRational) -> ExactRational:
    divisor = to_rational(b)
    if divisor == 0:
        raise ExactDivisionError(f"除数为零: {format_rational(to_rational(a))} / 0")
    return to_rational(a) / divisor


def binomial(n: int, k: int) -> ExactInt:
    """二项式系数 C(n, k)，k > n 时为 0"""
    check_index("n", n)
    check_index("k", k)
    return math.comb(n, k)


def factorial(n: int) -> ExactInt:
    check_index("n", n)
    return math.factorial(n)


def falling_factorial_int(x: RationalLike, n: int) -> ExactRational:
    """下降阶乘 x(x-1)...(x-n+1)，n = 0 时为 1"""
    check_index("n", n)
    x = to_rational(x)
    result = Fraction(1)
    for i in range(n):
        result *= x - i
    return result


def rising_factorial_int(x: RationalLike, n: int) -> ExactRational:
    """上升阶乘 x(x+1)...(x+n-1)"""
    check_index("n", n)
    x = to_rational(x)
    result = Fraction(1)
    for i in range(n):
        result *= x + i
    return result


def kronecker_delta(n: int, m: int) -> ExactInt:
    return 1 if n == m else 0


def format_rational(a: RationalLike) -> str:
    """序列化为 "p/q"（q > 0 且既约），整数不带 "/1" """
    a = to_rational(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def parse_rational(text: str) -> ExactRational:
    """解析 "p" 或 "p/q"；不接受小数写法"""
    raw = text.strip()
    numerator, sep, denominator = raw.partition("/")
    try:
        p = int(numerator)
        q = int(denominator) if sep else 1
    except ValueError as e:
        raise DomainError(f"无法解析的有理数: {text!r}") from e
    if q == 0:
        raise ExactDivisionError(f"分母为零: {text!r}")
    return Fraction(p, q)
