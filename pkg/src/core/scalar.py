"""
标量与数值模式

两种模式:
  - rational: fractions.Fraction，全程无舍入，结构恒等式逐系数精确成立
  - float:    双精度，比较时使用容差 ε（默认取自配置，可被 RI_COPOLY_PRECISION 覆盖）
"""

from fractions import Fraction
from numbers import Number
from typing import Iterable, Union

from src.core.errors import DomainError

RATIONAL = 'rational'
FLOAT = 'float'
MODES = (RATIONAL, FLOAT)

Scalar = Union[Fraction, int, float, complex]


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise DomainError(f"未知数值模式: {mode!r}（可选 {MODES}）")
    return mode


def to_scalar(value, mode: str = RATIONAL) -> Scalar:
    """把 int/float/str/Fraction 转成指定模式下的标量

    字符串接受 "1/4"、"-0.5"、"3" 等写法；rational 模式下 float 按其十进制
    repr 转换（0.3 → 3/10），避免二进制尾数混入精确计算。
    """
    check_mode(mode)
    if isinstance(value, str):
        value = Fraction(value.strip())
    if mode == RATIONAL:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, bool):
            raise DomainError("布尔值不是标量")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, float):
            return Fraction(repr(value))
        if isinstance(value, complex):
            raise DomainError("rational 模式不支持复数")
        return Fraction(value)
    if isinstance(value, complex):
        return value
    return float(value)


def to_float(value) -> Union[float, complex]:
    if isinstance(value, complex):
        return value
    return float(value)


def is_exact(value) -> bool:
    return isinstance(value, (Fraction, int)) and not isinstance(value, bool)


def all_exact(values: Iterable) -> bool:
    return all(is_exact(v) for v in values)


def is_zero(value, tol: float = None) -> bool:
    """精确值按 == 0 判断；浮点值按 |x| <= tol"""
    if tol is None or is_exact(value):
        return value == 0
    return abs(value) <= tol


def close(a: Number, b: Number, tol: float = None) -> bool:
    """tol=None 时要求精确相等，否则 |a-b| <= tol·max(1,|a|,|b|)"""
    if tol is None:
        return a == b
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))
