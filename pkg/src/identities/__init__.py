from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple


class IdentityId(Enum):
    """可校验的恒等式（声明顺序即报告顺序）"""

    EQ5_ORTHO = "EQ5_ORTHO"  # sum_i s(n,i) S(i,m) = δ
    EQ6_ORTHO = "EQ6_ORTHO"  # sum_i S(n,i) s(i,m) = δ
    EQ9_DELTA_FALLING = "EQ9_DELTA_FALLING"  # Δ X<n> = n X<n-1>
    EQ10_DELTA_BERN = "EQ10_DELTA_BERN"  # Δ B_n(X) = n X^{n-1}
    EQ11_DIFF_BERN = "EQ11_DIFF_BERN"  # B_n'(X) = n B_{n-1}(X)
    EQ12_INT_BERN = "EQ12_INT_BERN"  # ∫_0^1 B_n = 0
    EQ13_INT_FALLING = "EQ13_INT_FALLING"  # ∫_0^1 x<n> = B_n*
    EQ14_BERN_EXPANSION = "EQ14_BERN_EXPANSION"  # B_n(X) = sum C(n,k) B_{n-k} X^k
    EQ17_RISING = "EQ17_RISING"  # X(X+1)...(X+n-1) = sum |s(n,k)| X^k
    EQ18_RISING_SHIFTED = "EQ18_RISING_SHIFTED"  # (X+1)...(X+n-1) = sum |s(n,k+1)| X^k
    EQ19_DELTAINV_FALLING = "EQ19_DELTAINV_FALLING"  # Δ^{-1} X<n> = X<n+1>/(n+1)
    EQ20_DELTAINV_MONOMIAL = "EQ20_DELTAINV_MONOMIAL"  # Δ^{-1} X^n = B_{n+1}(X)/(n+1)
    T1 = "T1"  # B_n(X) 在下降阶乘基下的展开
    C1 = "C1"  # B_n 用 B_k* 表示
    L1_INVERSION = "L1_INVERSION"  # s / S 数列反演
    T2 = "T2"  # B_n* 用 B_k 表示
    T3 = "T3"  # X<n> 用 B_k(X) 表示
    C2 = "C2"
    C3 = "C3"  # B_n = sum (-1)^i i!/(i+1) S(n,i)
    C4 = "C4"
    T4 = "T4"
    C5 = "C5"
    C5_REMARK_SERIES = "C5_REMARK_SERIES"  # t/((1+t)log(1+t)) 的系数
    C6 = "C6"  # B_n* = sum s(n,i)/(i+1)
    T5 = "T5"
    T6 = "T6"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "IdentityId":
        """按名称解析，不区分大小写；也接受 EQ5 这类简写"""
        key = text.strip().upper()
        if key in cls.__members__:
            return cls[key]
        for member in cls:
            if member.value.split("_")[0] == key:
                return member
        raise ValueError(f"未知的恒等式: {text}")


class IdentityStatus(Enum):
    PASS = "pass"
    FAIL = "fail"

    def __str__(self) -> str:
        return self.value


class BoundsError(ValueError):
    """扫描范围非法（非正或零宽度）"""


@dataclass(frozen=True)
class Counterexample:
    params: Dict[str, int]
    lhs: Any
    rhs: Any


@dataclass(frozen=True)
class IdentityReport:
    """
    单个恒等式在一个参数范围上的校验结果

    status 为 FAIL 时 counterexample 必然存在且 lhs != rhs；
    checks_performed 是实际比较过的参数组数。
    """

    id: IdentityId
    range: str
    params: Dict[str, int]
    status: IdentityStatus
    checks_performed: int
    counterexample: Optional[Counterexample] = None
    notes: Tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.status is IdentityStatus.PASS
