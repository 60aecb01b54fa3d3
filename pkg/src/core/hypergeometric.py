"""
有限项 Gauss 超几何和

F(-n, b; d; x) = Σ_{j=0}^{n} (-n)_j (b)_j / ((d)_j j!) x^j
"""

from fractions import Fraction

from src.core.errors import PoleError
from src.core.scalar import Scalar


def pochhammer(a: Scalar, j: int) -> Scalar:
    """上升阶乘 (a)_j = a(a+1)···(a+j-1)"""
    acc = Fraction(1)
    for i in range(j):
        acc *= a + i
    return acc


def terminating_2f1(n: int, b: Scalar, d: Scalar, x: Scalar) -> Scalar:
    """逐项比值累加 F(-n, b; d; x)；(d)_j 在 j <= n 内为零时抛 PoleError"""
    term = Fraction(1)
    total = term
    for j in range(n):
        den = (d + j) * (j + 1)
        if den == 0:
            raise PoleError(f"F(-{n}, {b}; {d}; x): (d)_{j + 1} = 0")
        term = term * (-n + j) * (b + j) / den * x
        total += term
    return total
