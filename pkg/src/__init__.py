import os

import tomlkit

from .config import global_config, EXPECTED_CONFIG_VERSION
from .logger import logger

pyproject_path = os.path.join(os.path.dirname(os.path.dirname(__file__)), "pyproject.toml")
with open(pyproject_path, "r", encoding="utf-8") as _f:
    __version__: str = str(tomlkit.parse(_f.read())["project"]["version"])

if not global_config.version_matches:
    logger.warning(
        f"默认配置版本 v{global_config.inner.version} 与程序期望的 v{EXPECTED_CONFIG_VERSION} 不一致，请检查 template 目录"
    )
logger.debug(f"StirlingBernoulliVerifier 版本: {__version__}")
