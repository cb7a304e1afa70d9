from enum import Enum


class StirlingKind(Enum):
    """Stirling 三角的种类"""

    FIRST_SIGNED = "stirling1"  # s(n,k)
    FIRST_UNSIGNED = "stirling1u"  # |s(n,k)|
    SECOND = "stirling2"  # S(n,k)

    def __str__(self) -> str:
        return self.value


class BernoulliKind(Enum):
    """Bernoulli 数的种类"""

    FIRST = "bernoulli1"  # B_n，取 B_1 = -1/2
    SECOND = "bernoulli2"  # B_n*，Roman 归一化

    def __str__(self) -> str:
        return self.value
