from enum import Enum


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"
    PLAIN_TEXT = "text"

    def __str__(self) -> str:
        return self.value


class TableFamily(Enum):
    STIRLING1 = "stirling1"  # 有符号第一类 Stirling 数 s(n,k)
    STIRLING1U = "stirling1u"  # 无符号第一类 |s(n,k)|
    STIRLING2 = "stirling2"  # 第二类 Stirling 数 S(n,k)
    BERNOULLI1 = "bernoulli1"  # 第一类 Bernoulli 数 B_n
    BERNOULLI2 = "bernoulli2"  # 第二类 Bernoulli 数 B_n*
    BERNPOLY = "bernpoly"  # Bernoulli 多项式 B_n(X) 的单项式系数

    def __str__(self) -> str:
        return self.value

    @property
    def is_sequence(self) -> bool:
        """数列每行只有一个值，三角与多项式每行一组值"""
        return self in (TableFamily.BERNOULLI1, TableFamily.BERNOULLI2)


# 退出码
EXIT_OK = 0
EXIT_IDENTITY_FAILED = 1
EXIT_USAGE = 2
