from loguru import logger
from .config import global_config
import sys
from pathlib import Path
from datetime import datetime, timedelta

# 日志目录配置（仅在启用文件日志时创建）
LOG_DIR = Path(__file__).parent.parent / "logs"

# 日志等级映射(用于显示单字母)
LEVEL_ABBR = {
    "TRACE": "T",
    "DEBUG": "D",
    "INFO": "I",
    "SUCCESS": "S",
    "WARNING": "W",
    "ERROR": "E",
    "CRITICAL": "C",
}

CONSOLE_FORMAT = (
    "<blue>{time:MM-DD HH:mm:ss}</blue> | <level>[{extra[level_abbr]}]</level> | "
    "<cyan>{extra[module_name]}</cyan> | <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | [{level}] | {extra[module_name]} | {name}:{function}:{line} - {message}"

_console_sink_id: int | None = None


def get_level_abbr(record):
    """获取日志等级的缩写"""
    return LEVEL_ABBR.get(record["level"].name, record["level"].name[0])


def clean_old_logs(days: int = 30):
    """清理超过指定天数的日志文件"""
    cutoff_date = datetime.now() - timedelta(days=days)
    for log_file in LOG_DIR.glob("*.log"):
        try:
            if datetime.fromtimestamp(log_file.stat().st_mtime) < cutoff_date:
                log_file.unlink()
        except OSError as e:
            print(f"清理日志文件 {log_file.name} 失败: {e}", file=sys.stderr)


def format_log(record):
    """补全 extra 字段"""
    record["extra"]["level_abbr"] = get_level_abbr(record)
    if "module_name" not in record["extra"]:
        record["extra"]["module_name"] = "Verifier"
    return True


def set_console_level(level: str) -> None:
    """重新安装控制台处理器（CLI 的 --verbose 使用）

    结果只写标准输出，日志只写标准错误，两者互不干扰。
    """
    global _console_sink_id
    if _console_sink_id is not None:
        logger.remove(_console_sink_id)
    _console_sink_id = logger.add(
        sys.stderr,
        level=level,
        format=CONSOLE_FORMAT,
        filter=format_log,
    )


# 移除默认处理器
logger.remove()
set_console_level(global_config.debug.level)

# 文件输出处理器 - 详细格式,记录所有TRACE级别
if global_config.debug.log_to_file:
    LOG_DIR.mkdir(exist_ok=True)
    clean_old_logs(global_config.debug.retention_days)
    logger.add(
        LOG_DIR / f"verifier_{datetime.now().strftime('%Y%m%d_%H%M%S')}.log",
        level="TRACE",
        format=FILE_FORMAT,
        rotation="100 MB",
        retention=f"{global_config.debug.retention_days} days",
        encoding="utf-8",
        enqueue=True,
        filter=format_log,
    )


def get_logger(module_name: str = "Verifier"):
    """
    获取自定义模块名的logger

    Args:
        module_name: 模块名称,用于日志输出中标识来源

    Returns:
        配置好的logger实例

    Example:
        >>> from src.logger import get_logger
        >>> logger = get_logger("Sequences")
        >>> logger.warning("缓存扩展失败")
        MM-DD HH:mm:ss | [W] | Sequences | 缓存扩展失败
    """
    return logger.bind(module_name=module_name)


logger = logger.bind(module_name="Verifier")
