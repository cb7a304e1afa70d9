from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, Iterator, Tuple

from src.logger import get_logger

from . import BoundsError, Counterexample, IdentityId, IdentityReport, IdentityStatus

logger = get_logger("Identities")

# 一个参数点：(参数, 左边, 右边)
Point = Tuple[Dict[str, int], Any, Any]


@dataclass(frozen=True)
class CheckerEntry:
    func: Callable[..., IdentityReport]
    bounds: Tuple[str, ...]
    """检查器从 SweepBounds 中读取的字段名，同时也是检查器的关键字参数名"""


# 全局检查器注册表（在模块级定义，各 checks 模块导入时填充）
_checkers: Dict[IdentityId, CheckerEntry] = {}


def register_checker(identity_id: IdentityId, *bounds: str):
    """装饰器：注册恒等式检查器

    Args:
        identity_id: 检查器负责的恒等式
        bounds: 需要的范围参数名（max_n / max_r / trials / seed / value_bound / order）

    Returns:
        装饰器函数
    """

    def decorator(func: Callable[..., IdentityReport]) -> Callable[..., IdentityReport]:
        if identity_id in _checkers:
            raise RuntimeError(f"恒等式 {identity_id} 的检查器重复注册")
        _checkers[identity_id] = CheckerEntry(func=func, bounds=bounds)
        return func

    return decorator


def registered_checkers() -> Dict[IdentityId, CheckerEntry]:
    return dict(_checkers)


def require_bound(name: str, value: int, lower: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise BoundsError(f"{name} 必须是整数，收到 {type(value).__name__}")
    if value < lower:
        raise BoundsError(f"{name} 必须 >= {lower}，收到 {value}")
    return value


class IdentitySweep:
    """
    累积一次扫描的比较结果

    run() 惰性消费参数点生成器，遇到第一个反例即停止（该恒等式短路，其余恒等式照常执行）。
    所有比较都是精确相等，没有容差。
    """

    def __init__(self, identity_id: IdentityId, range_desc: str, params: Dict[str, int]):
        self.identity_id = identity_id
        self.range_desc = range_desc
        self.params = dict(params)
        self.checks_performed = 0
        self.counterexample: Counterexample | None = None
        self.notes: list[str] = []

    def note(self, text: str) -> None:
        self.notes.append(text)

    def compare(self, point: Dict[str, int], lhs: Any, rhs: Any) -> bool:
        self.checks_performed += 1
        if lhs == rhs:
            return True
        if self.counterexample is None:
            self.counterexample = Counterexample(params=dict(point), lhs=lhs, rhs=rhs)
        return False

    def run(self, points: Iterable[Point]) -> IdentityReport:
        iterator: Iterator[Point] = iter(points)
        for point, lhs, rhs in iterator:
            if not self.compare(point, lhs, rhs):
                break
        return self.report()

    def report(self) -> IdentityReport:
        status = IdentityStatus.PASS if self.counterexample is None else IdentityStatus.FAIL
        if status is IdentityStatus.FAIL:
            logger.warning(
                f"{self.identity_id} 不成立: 参数 {self.counterexample.params}, "
                f"左边 {self.counterexample.lhs}, 右边 {self.counterexample.rhs}"
            )
        else:
            logger.debug(f"{self.identity_id} 通过 {self.checks_performed} 次比较 ({self.range_desc})")
        return IdentityReport(
            id=self.identity_id,
            range=self.range_desc,
            params=dict(self.params),
            status=status,
            checks_performed=self.checks_performed,
            counterexample=self.counterexample,
            notes=tuple(self.notes),
        )
