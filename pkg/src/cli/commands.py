from typing import Optional, TextIO

from src.exact_arith import check_index
from src.identities import IdentityId
from src.identities.runner import SweepBounds, run_all, summarize
from src.logger import get_logger
from src.sequences import BernoulliKind, StirlingKind
from src.sequences.bernoulli import bernoulli_cache, bernoulli_polynomial
from src.sequences.stirling import stirling_row

from . import EXIT_IDENTITY_FAILED, EXIT_OK, OutputFormat, TableFamily
from .serializers import TableData, render_reports, render_table

logger = get_logger("CLI")

_STIRLING_FAMILIES = {
    TableFamily.STIRLING1: StirlingKind.FIRST_SIGNED,
    TableFamily.STIRLING1U: StirlingKind.FIRST_UNSIGNED,
    TableFamily.STIRLING2: StirlingKind.SECOND,
}

_BERNOULLI_FAMILIES = {
    TableFamily.BERNOULLI1: BernoulliKind.FIRST,
    TableFamily.BERNOULLI2: BernoulliKind.SECOND,
}


def build_table(family: TableFamily, max_n: int) -> TableData:
    """生成第 0..max_n 行；三角每行 k = 0..n，bernpoly 每行为由低到高的单项式系数"""
    check_index("max_n", max_n)
    if family in _STIRLING_FAMILIES:
        kind = _STIRLING_FAMILIES[family]
        rows = tuple(stirling_row(kind, n) for n in range(max_n + 1))
    elif family in _BERNOULLI_FAMILIES:
        rows = tuple((value,) for value in bernoulli_cache(_BERNOULLI_FAMILIES[family]).prefix(max_n))
    else:
        rows = tuple(bernoulli_polynomial(n).to_monomial().coeffs for n in range(max_n + 1))
    return TableData(family=family, max_n=max_n, rows=rows)


def cmd_table(family: TableFamily, max_n: int, fmt: OutputFormat, out: TextIO) -> int:
    table = build_table(family, max_n)
    logger.debug(f"输出 {family} 表格，共 {len(table.rows)} 行")
    out.write(render_table(table, fmt))
    return EXIT_OK


def cmd_verify(
    identity: Optional[IdentityId],
    bounds: SweepBounds,
    fmt: OutputFormat,
    out: TextIO,
    workers: int = 1,
) -> int:
    """
    校验一个恒等式（identity 为 None 时校验全部）

    Returns:
        全部通过返回 0，存在反例返回 1
    """
    ids = None if identity is None else [identity]
    reports = run_all(bounds, ids=ids, workers=workers)
    summary = summarize(reports)
    params = {
        "max_n": bounds.max_n,
        "max_r": bounds.max_r,
        "trials": bounds.trials,
        "seed": bounds.seed,
        "value_bound": bounds.value_bound,
    }
    out.write(render_reports("all" if identity is None else str(identity), params, reports, summary, fmt))
    return EXIT_OK if summary.passed else EXIT_IDENTITY_FAILED
