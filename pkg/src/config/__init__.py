from .config import global_config, load_config, Config, EXPECTED_CONFIG_VERSION

__all__ = [
    "global_config",
    "load_config",
    "Config",
    "EXPECTED_CONFIG_VERSION",
]
