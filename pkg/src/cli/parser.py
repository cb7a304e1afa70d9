import argparse
import sys
from typing import List, Optional, TextIO

from src import __version__
from src.config import global_config
from src.exact_arith import DomainError
from src.identities import BoundsError, IdentityId
from src.identities.runner import SweepBounds
from src.logger import get_logger, set_console_level

from . import EXIT_USAGE, OutputFormat, TableFamily
from .commands import cmd_table, cmd_verify

logger = get_logger("CLI")

COEFF_ORDER_HELP = "多项式系数按次数由低到高输出（c0, c1, ...）"


def _identity_arg(text: str) -> Optional[IdentityId]:
    if text.strip().lower() == "all":
        return None
    try:
        return IdentityId.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=[str(fmt) for fmt in OutputFormat],
        default=global_config.output.format,
        help=f"输出格式（默认 {global_config.output.format}）",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="在标准错误输出调试日志")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stirling-bernoulli",
        description="Stirling 数、Bernoulli 数与相关恒等式的精确有理数计算与校验",
        epilog=COEFF_ORDER_HELP,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    table = subparsers.add_parser("table", help="输出数表", epilog=COEFF_ORDER_HELP)
    families = [str(family) for family in TableFamily]
    table.add_argument("family", nargs="?", choices=families, help="数表种类")
    table.add_argument("--family", dest="family_opt", choices=families, help="同位置参数 family")
    table.add_argument(
        "--max-n", type=int, default=global_config.table.max_n, help=f"最大行号（默认 {global_config.table.max_n}）"
    )
    _add_common(table)

    defaults = global_config.verify
    verify = subparsers.add_parser("verify", help="校验恒等式", epilog=COEFF_ORDER_HELP)
    verify.add_argument(
        "--identity",
        type=_identity_arg,
        default=None,
        help="恒等式名称（如 C6、EQ5_ORTHO）或 all（默认 all）",
    )
    verify.add_argument("--max-n", type=int, default=defaults.max_n, help=f"n 的上界（默认 {defaults.max_n}）")
    verify.add_argument("--max-r", type=int, default=defaults.max_r, help=f"r 的上界（默认 {defaults.max_r}）")
    verify.add_argument("--trials", type=int, default=defaults.trials, help=f"反演引理随机试验次数（默认 {defaults.trials}）")
    verify.add_argument("--seed", type=int, default=defaults.seed, help=f"随机种子（默认 {defaults.seed}）")
    verify.add_argument(
        "--value-bound",
        type=int,
        default=defaults.value_bound,
        help=f"随机有理数分子分母的上界（默认 {defaults.value_bound}）",
    )
    verify.add_argument("--workers", type=int, default=defaults.workers, help=f"并行线程数（默认 {defaults.workers}）")
    _add_common(verify)
    return parser


def _run(args: argparse.Namespace, out: TextIO) -> int:
    fmt = OutputFormat(args.format)
    if args.command == "table":
        if args.family and args.family_opt and args.family != args.family_opt:
            raise DomainError(f"数表种类冲突: {args.family} 与 {args.family_opt}")
        family = args.family or args.family_opt
        if family is None:
            raise DomainError("缺少数表种类")
        return cmd_table(TableFamily(family), args.max_n, fmt, out)

    bounds = SweepBounds(
        max_n=args.max_n,
        max_r=args.max_r,
        trials=args.trials,
        seed=args.seed,
        value_bound=args.value_bound,
    )
    return cmd_verify(args.identity, bounds, fmt, out, workers=args.workers)


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    命令行入口

    结果写入 out（默认标准输出），诊断信息走日志（标准错误）。

    Returns:
        0 成功或全部通过；1 存在反例；2 用法错误
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse 用法错误退出码为 2，--help / --version 为 0
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.verbose:
        set_console_level("DEBUG")

    try:
        return _run(args, out if out is not None else sys.stdout)
    except (DomainError, BoundsError) as e:
        logger.error(f"参数错误: {e}")
        return EXIT_USAGE
