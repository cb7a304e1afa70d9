from dataclasses import dataclass, field
from typing import Literal

from src.config.config_base import ConfigBase

"""
须知：
1. 本文件中记录了所有的配置项
2. 所有新增的class都需要继承自ConfigBase
3. 所有新增的class都应在config.py中的Config类中添加字段
4. 对于新增的字段，若为可选项，则应在其后添加field()并设置default
"""

OutputFormatName = Literal["text", "csv", "json"]


@dataclass
class InnerConfig(ConfigBase):
    version: str = ""
    """配置文件版本号"""


@dataclass
class VerifyConfig(ConfigBase):
    max_n: int = field(default=40, metadata={"min": 1})
    """n 的扫描上界"""

    max_r: int = field(default=5, metadata={"min": 1})
    """r 的扫描上界（T5 / T6）"""

    trials: int = field(default=100, metadata={"min": 1})
    """反演引理的随机试验次数"""

    seed: int = 0
    """随机种子"""

    value_bound: int = field(default=1000, metadata={"min": 1})
    """随机有理数分子/分母的绝对值上界"""

    workers: int = field(default=1, metadata={"min": 1})
    """并行执行检查器的线程数"""


@dataclass
class TableConfig(ConfigBase):
    max_n: int = field(default=10, metadata={"min": 0})
    """table 子命令默认输出的最大行号"""


@dataclass
class OutputConfig(ConfigBase):
    format: OutputFormatName = "text"
    """默认输出格式"""


@dataclass
class DebugConfig(ConfigBase):
    level: Literal["TRACE", "DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "WARNING"
    """控制台日志级别"""

    log_to_file: bool = False
    """是否写入日志文件"""

    retention_days: int = field(default=30, metadata={"min": 1})
    """日志文件保留天数"""
