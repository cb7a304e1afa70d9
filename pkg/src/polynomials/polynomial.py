"""有理系数多项式（单项式基 / 下降阶乘基）

系数按下标稠密存储：下标 i 对应 X^i 或 X<i>。
零多项式用空系数元组表示，其 degree 为 None；其余情况最高位系数非零。
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from src.exact_arith import RationalLike, check_index, falling_factorial_int, format_rational, to_rational
from src.sequences.stirling import falling_to_monomial_matrix, monomial_to_falling_matrix

from . import Basis, BasisMismatchError


def _trim(coeffs: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
    values = [to_rational(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class Polynomial:
    basis: Basis
    coeffs: Tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.basis, Basis):
            raise TypeError(f"basis 必须是 Basis，收到 {type(self.basis).__name__}")
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    # ============ 构造 ============

    @classmethod
    def monomial(cls, coeffs: Sequence[RationalLike]) -> "Polynomial":
        return cls(Basis.MONOMIAL, tuple(coeffs))

    @classmethod
    def falling(cls, coeffs: Sequence[RationalLike]) -> "Polynomial":
        return cls(Basis.FALLING_FACTORIAL, tuple(coeffs))

    @classmethod
    def zero(cls, basis: Basis = Basis.MONOMIAL) -> "Polynomial":
        return cls(basis, ())

    @classmethod
    def constant(cls, value: RationalLike, basis: Basis = Basis.MONOMIAL) -> "Polynomial":
        return cls(basis, (value,))

    @classmethod
    def x_power(cls, n: int) -> "Polynomial":
        """X^n（单项式基）"""
        check_index("n", n)
        return cls(Basis.MONOMIAL, (0,) * n + (1,))

    @classmethod
    def falling_factorial(cls, n: int) -> "Polynomial":
        """X<n>（下降阶乘基）"""
        check_index("n", n)
        return cls(Basis.FALLING_FACTORIAL, (0,) * n + (1,))

    # ============ 基本属性 ============

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, i: int) -> Fraction:
        check_index("i", i)
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def to_monomial(self) -> "Polynomial":
        return poly_convert(self, Basis.MONOMIAL)

    def to_falling(self) -> "Polynomial":
        return poly_convert(self, Basis.FALLING_FACTORIAL)

    # ============ 线性运算 ============

    def _require_same_basis(self, other: "Polynomial") -> None:
        if self.basis is not other.basis:
            raise BasisMismatchError(f"基不一致: {self.basis} 与 {other.basis}，请先调用 poly_convert")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_basis(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.basis, tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.basis, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: RationalLike) -> "Polynomial":
        factor = to_rational(factor)
        return Polynomial(self.basis, tuple(factor * c for c in self.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return poly_mul(self, other)

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    def __str__(self) -> str:
        return f"{self.basis}:[{', '.join(format_rational(c) for c in self.coeffs)}]"


def poly_convert(p: Polynomial, target: Basis) -> Polynomial:
    """
    基变换

    X<n> = sum_k s(n,k) X^k，X^n = sum_k S(n,k) X<k>；
    变换矩阵直接取自 sequences 中的 Stirling 三角。
    """
    if p.basis is target:
        return p
    matrix_row = falling_to_monomial_matrix if target is Basis.MONOMIAL else monomial_to_falling_matrix
    out = [Fraction(0)] * len(p.coeffs)
    for n, c in enumerate(p.coeffs):
        if c == 0:
            continue
        for k, entry in enumerate(matrix_row(n)):
            if entry:
                out[k] += c * entry
    return Polynomial(target, tuple(out))


def poly_eval(p: Polynomial, x: RationalLike) -> Fraction:
    """精确求值；下降阶乘基逐项使用 falling_factorial_int"""
    x = to_rational(x)
    if p.basis is Basis.MONOMIAL:
        result = Fraction(0)
        for c in reversed(p.coeffs):
            result = result * x + c
        return result
    return sum((c * falling_factorial_int(x, k) for k, c in enumerate(p.coeffs)), Fraction(0))


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """乘积（单项式基）；下降阶乘基的操作数先转换"""
    a = p.to_monomial().coeffs
    b = q.to_monomial().coeffs
    if not a or not b:
        return Polynomial.zero()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return Polynomial(Basis.MONOMIAL, tuple(out))
