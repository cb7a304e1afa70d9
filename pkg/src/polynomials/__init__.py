from enum import Enum


class Basis(Enum):
    """多项式的基"""

    MONOMIAL = "monomial"  # X^k
    FALLING_FACTORIAL = "falling_factorial"  # X<k> = X(X-1)...(X-k+1)

    def __str__(self) -> str:
        return self.value


class BasisMismatchError(ValueError):
    """不同基的多项式之间直接运算"""
