"""
异常定义

全部库异常都继承自 RIError，CLI 只捕获这一个根类型。
"""


class RIError(Exception):
    """R_I 工具包异常基类"""


class SequenceIndexError(RIError, IndexError):
    """有限系数序列长度不足"""


class ZeroLambdaError(RIError):
    """递推中用到的 λ_n 为零"""


class PoleError(RIError):
    """闭式系数或超几何级数遇到极点"""


class DomainError(RIError, ValueError):
    """参数超出定义域"""


class VacuousPerturbationError(RIError, ValueError):
    """k=0 处的 co-dilation（λ_0 从不进入递推）"""


class CalibrationError(RIError):
    """所有候选约定都无法复现直接递推结果"""


class DegenerateHomographyError(RIError):
    """AD - BC 恒为零"""


class FractionPoleError(RIError, ZeroDivisionError):
    """连分式求值时某一层分母为零"""

    def __init__(self, depth: int, z, message: str = None):
        self.depth = depth
        self.z = z
        super().__init__(message or f"第 {depth} 层分母在 z={z} 处为零")


class NonConvergenceError(RIError):
    """Newton 打磨未达到残差要求"""


class MultipleZeroError(RIError):
    """检测到重根"""


class SingularSystemError(RIError):
    """矩系统奇异（退化泛函）"""


class BlowUpError(RIError):
    """积分过程中系数爆炸或分母过小"""


class NotAChainSequenceError(RIError):
    """最小参数序列跑出 (0,1)"""


class BreakdownError(RIError):
    """最大参数后向递推中出现 g <= 0"""


class ModulusViolationError(RIError):
    """|δ_n| >= 1"""


class SpecParseError(RIError, ValueError):
    """族/扰动描述字符串无法解析"""


class UsageError(RIError):
    """CLI 用法错误（未知表号、未知套件等）"""


class DeltaZeroError(RIError, ZeroDivisionError):
    """δ 递推中 δ_n = 0"""
