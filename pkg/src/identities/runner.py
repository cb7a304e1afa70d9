from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from src.logger import get_logger

from . import BoundsError, IdentityId, IdentityReport
from . import bernoulli_checks, operator_checks, stirling_checks  # noqa: F401  导入即注册
from .registry import registered_checkers, require_bound

logger = get_logger("Identities")


@dataclass(frozen=True)
class SweepBounds:
    """一次完整校验使用的范围参数"""

    max_n: int = 40
    max_r: int = 5
    trials: int = 100
    seed: int = 0
    value_bound: int = 1000

    def __post_init__(self):
        require_bound("max_n", self.max_n)
        require_bound("max_r", self.max_r)
        require_bound("trials", self.trials)
        require_bound("value_bound", self.value_bound)
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise BoundsError(f"seed 必须是整数，收到 {type(self.seed).__name__}")

    @property
    def order(self) -> int:
        """级数阶数：系数下标覆盖 0..max_n"""
        return self.max_n + 1

    @classmethod
    def from_config(cls, verify_config) -> "SweepBounds":
        return cls(
            max_n=verify_config.max_n,
            max_r=verify_config.max_r,
            trials=verify_config.trials,
            seed=verify_config.seed,
            value_bound=verify_config.value_bound,
        )


@dataclass(frozen=True)
class VerifySummary:
    passed: bool
    total: int
    failed: Tuple[IdentityId, ...]
    checks_performed: int


def run_checker(identity_id: IdentityId, bounds: SweepBounds) -> IdentityReport:
    """按注册时声明的范围参数名从 bounds 取值并调用检查器"""
    entry = registered_checkers().get(identity_id)
    if entry is None:
        raise KeyError(f"恒等式 {identity_id} 没有注册检查器")
    kwargs = {name: getattr(bounds, name) for name in entry.bounds}
    logger.debug(f"开始校验 {identity_id}: {kwargs}")
    return entry.func(**kwargs)


def run_all(
    bounds: SweepBounds,
    ids: Optional[Iterable[IdentityId]] = None,
    workers: int = 1,
) -> List[IdentityReport]:
    """
    依次运行恒等式检查器

    Args:
        bounds: 范围参数
        ids: 只运行这些恒等式；None 表示全部。报告顺序始终按 IdentityId 的声明顺序
        workers: 线程数，> 1 时并行执行，结果仍按提交顺序收集

    Returns:
        报告列表
    """
    require_bound("workers", workers)
    selected = set(IdentityId) if ids is None else set(ids)
    ordered: Sequence[IdentityId] = [identity_id for identity_id in IdentityId if identity_id in selected]

    if workers == 1 or len(ordered) <= 1:
        return [run_checker(identity_id, bounds) for identity_id in ordered]

    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="verify") as executor:
        futures = [executor.submit(run_checker, identity_id, bounds) for identity_id in ordered]
        return [future.result() for future in futures]


def summarize(reports: Sequence[IdentityReport]) -> VerifySummary:
    failed = tuple(report.id for report in reports if not report.passed)
    summary = VerifySummary(
        passed=not failed,
        total=len(reports),
        failed=failed,
        checks_performed=sum(report.checks_performed for report in reports),
    )
    if summary.passed:
        logger.info(f"全部 {summary.total} 个恒等式通过，共 {summary.checks_performed} 次比较")
    else:
        logger.warning(f"{len(failed)}/{summary.total} 个恒等式不成立: {', '.join(map(str, failed))}")
    return summary
