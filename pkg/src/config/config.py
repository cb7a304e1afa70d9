import os
from dataclasses import dataclass, field

import tomlkit
from rich.traceback import install

from src.config.config_base import ConfigBase
from src.config.official_configs import (
    DebugConfig,
    InnerConfig,
    OutputConfig,
    TableConfig,
    VerifyConfig,
)

install(extra_lines=3)

TEMPLATE_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(__file__))), "template")
DEFAULT_CONFIG_PATH = os.path.join(TEMPLATE_DIR, "template_config.toml")

# 代码期望的配置文件版本
EXPECTED_CONFIG_VERSION = "0.2.0"


@dataclass
class Config(ConfigBase):
    """总配置类"""

    inner: InnerConfig = field(default_factory=InnerConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    table: TableConfig = field(default_factory=TableConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    debug: DebugConfig = field(default_factory=DebugConfig)

    @property
    def version_matches(self) -> bool:
        return self.inner.version == EXPECTED_CONFIG_VERSION


def load_config(config_path: str = DEFAULT_CONFIG_PATH) -> Config:
    """
    加载配置文件
    :param config_path: 配置文件路径
    :return: Config对象
    """
    with open(config_path, "r", encoding="utf-8") as f:
        config_data = tomlkit.load(f)

    try:
        return Config.from_dict(config_data.unwrap())
    except Exception as e:
        raise RuntimeError(f"配置文件解析失败 ({config_path}): {e}") from e


# 包内默认配置；日志模块在此之后才初始化，所以这里不记录日志
global_config = load_config()
