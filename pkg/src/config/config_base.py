from dataclasses import dataclass, fields, MISSING
from typing import TypeVar, Type, Any, get_origin, get_args, Literal, Dict, Union

T = TypeVar("T", bound="ConfigBase")


@dataclass
class ConfigBase:
    """配置类的基类

    子类字段可以通过 ``field(metadata={"min": 1})`` 声明整数下界，
    加载时统一校验。
    """

    @classmethod
    def from_dict(cls: Type[T], data: Dict[str, Any]) -> T:
        """从字典（或 tomlkit 的 Table）加载配置字段"""
        if not isinstance(data, dict):
            raise TypeError(f"Expected a dictionary for [{cls.__name__}], got {type(data).__name__}")

        init_args: Dict[str, Any] = {}

        for f in fields(cls):
            if f.name.startswith("_") or not f.init:
                continue

            if f.name not in data:
                if f.default is not MISSING or f.default_factory is not MISSING:
                    continue
                raise ValueError(f"Missing required field: '{f.name}'")

            try:
                value = cls._convert_field(data[f.name], f.type)
            except TypeError as e:
                raise TypeError(f"字段 '{f.name}' 出现类型错误: {e}") from e
            except Exception as e:
                raise RuntimeError(f"无法将字段 '{f.name}' 转换为目标类型，出现错误: {e}") from e

            lower = f.metadata.get("min")
            if lower is not None and value < lower:
                raise ValueError(f"字段 '{f.name}' 的值 {value} 小于允许的下界 {lower}")
            init_args[f.name] = value

        return cls(**init_args)

    @classmethod
    def _convert_field(cls, value: Any, field_type: Any) -> Any:
        """
        转换字段值为指定类型

        1. 嵌套的 ConfigBase 递归调用 from_dict
        2. list / dict 递归转换每个元素
        3. Literal 检查取值范围
        4. 基础类型严格检查（bool 不能冒充 int）
        """
        if isinstance(field_type, type) and issubclass(field_type, ConfigBase):
            return field_type.from_dict(value)

        origin = get_origin(field_type)
        args = get_args(field_type)

        if origin is list:
            if not isinstance(value, list):
                raise TypeError(f"Expected a list, got {type(value).__name__}")
            return [cls._convert_field(item, args[0]) for item in value]

        if origin is dict:
            if not isinstance(value, dict):
                raise TypeError(f"Expected a dictionary, got {type(value).__name__}")
            key_type, value_type = args
            return {cls._convert_field(k, key_type): cls._convert_field(v, value_type) for k, v in value.items()}

        if origin is Union:
            if value is None:
                return None
            return cls._convert_field(value, args[0])

        if origin is Literal:
            if value in args:
                return value
            raise TypeError(f"Value '{value}' is not in allowed values {args}")

        if field_type is Any:
            return value

        if field_type is int and isinstance(value, bool):
            raise TypeError("Expected int, got bool")
        if isinstance(value, field_type):
            # tomlkit 的 Integer / String 等包装类型在这里还原为内置类型
            return field_type(value)
        raise TypeError(f"Expected {field_type.__name__}, got {type(value).__name__}")

    def __str__(self):
        return f"{self.__class__.__name__}({', '.join(f'{f.name}={getattr(self, f.name)}' for f in fields(self))})"
