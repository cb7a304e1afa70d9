"""Stirling 三角

三种三角都按递推逐行生成并常驻内存：

    s(n,k)   = s(n-1,k-1) - (n-1) s(n-1,k)
    |s(n,k)| = |s(n-1,k-1)| + (n-1) |s(n-1,k)|
    S(n,k)   = S(n-1,k-1) + k S(n-1,k)

无符号三角有自己的递推，不是对有符号三角取绝对值。
"""

import threading
from typing import Callable, Dict, List, Tuple

from src.exact_arith import ExactInt, check_index
from src.logger import get_logger

from . import StirlingKind

logger = get_logger("Sequences")

# (上一行, n, k) -> 本行第 k 项，约定 1 <= k <= n-1
RowStep = Callable[[List[int], int, int], int]


def _step_first_signed(prev: List[int], n: int, k: int) -> int:
    return prev[k - 1] - (n - 1) * prev[k]


def _step_first_unsigned(prev: List[int], n: int, k: int) -> int:
    return prev[k - 1] + (n - 1) * prev[k]


def _step_second(prev: List[int], n: int, k: int) -> int:
    return prev[k - 1] + k * prev[k]


_ROW_STEPS: Dict[StirlingKind, RowStep] = {
    StirlingKind.FIRST_SIGNED: _step_first_signed,
    StirlingKind.FIRST_UNSIGNED: _step_first_unsigned,
    StirlingKind.SECOND: _step_second,
}


class StirlingTriangle:
    """
    只增不减的 Stirling 三角缓存

    rows[n][k] (0 <= k <= n)。已生成的行不再修改，读取无需加锁；
    扩展在锁内串行执行，并发调用者看到的总是一致的前缀。
    """

    def __init__(self, kind: StirlingKind):
        self.kind = kind
        self._step = _ROW_STEPS[kind]
        self._rows: List[Tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._rows)

    def ensure(self, n: int) -> None:
        """保证第 0..n 行已生成"""
        if n < len(self._rows):
            return
        with self._lock:
            start = len(self._rows)
            for m in range(start, n + 1):
                prev = list(self._rows[m - 1])
                # 首列为 0、对角线为 1，其余由递推给出
                row = [0] * (m + 1)
                row[m] = 1
                for k in range(1, m):
                    row[k] = self._step(prev, m, k)
                self._rows.append(tuple(row))
            if n >= start:
                logger.debug(f"{self.kind} 三角扩展到第 {n} 行")

    def row(self, n: int) -> Tuple[int, ...]:
        check_index("n", n)
        self.ensure(n)
        return self._rows[n]

    def get(self, n: int, k: int) -> ExactInt:
        check_index("n", n)
        check_index("k", k)
        if k > n:
            return 0
        self.ensure(n)
        return self._rows[n][k]


_triangles: Dict[StirlingKind, StirlingTriangle] = {kind: StirlingTriangle(kind) for kind in StirlingKind}


def stirling_triangle(kind: StirlingKind) -> StirlingTriangle:
    return _triangles[kind]


def stirling_row(kind: StirlingKind, n: int) -> Tuple[int, ...]:
    """第 n 行，k = 0..n"""
    return _triangles[kind].row(n)


def stirling1(n: int, k: int) -> ExactInt:
    """有符号第一类 Stirling 数 s(n,k)；k > n 时为 0"""
    return _triangles[StirlingKind.FIRST_SIGNED].get(n, k)


def stirling1_unsigned(n: int, k: int) -> ExactInt:
    """无符号第一类 Stirling 数 |s(n,k)|"""
    return _triangles[StirlingKind.FIRST_UNSIGNED].get(n, k)


def stirling2(n: int, k: int) -> ExactInt:
    """第二类 Stirling 数 S(n,k)；k > n 时为 0"""
    return _triangles[StirlingKind.SECOND].get(n, k)


def falling_to_monomial_matrix(n: int) -> Tuple[int, ...]:
    """X<n> 在单项式基下的系数，即 s(n, 0..n)"""
    return stirling_row(StirlingKind.FIRST_SIGNED, n)


def monomial_to_falling_matrix(n: int) -> Tuple[int, ...]:
    """X^n 在下降阶乘基下的系数，即 S(n, 0..n)"""
    return stirling_row(StirlingKind.SECOND, n)
