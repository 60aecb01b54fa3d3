"""
L-Jacobi 族及其超几何表示

    c_n = (c+n)/(a-n-1),  λ_n = n(c+n-a)/((a-n-1)(a-n)),  a_n = 0
    P^(a,c)_n(x) = ((c)_n/(1-a)_n) · F(-n, 1-a; 1-c-n; x)
"""

from fractions import Fraction

from src.core.errors import PoleError
from src.core.hypergeometric import pochhammer, terminating_2f1
from src.core.scalar import RATIONAL, Scalar
from src.core.sequences import CoefficientSequences


def ljacobi_positive(a: Scalar, c: Scalar, N: int) -> bool:
    """c_n, λ_n 在 n <= N 内为正的充分条件: c > a > N 或 a < c < 1 - N"""
    return (c > a > N) or (a < c < 1 - N)


def ljacobi_seqs(a: Scalar, c: Scalar, N: int = 10, mode: str = RATIONAL) -> CoefficientSequences:
    """L-Jacobi 系数序列

    Args:
        a, c: 族参数
        N: 用于判定 positive_L 的次数范围
        mode: 数值模式
    """
    a, c = Fraction(a), Fraction(c)

    def c_rule(n):
        if a - n - 1 == 0:
            raise PoleError(f"L-Jacobi: a - {n} - 1 = 0")
        return (c + n) / (a - n - 1)

    def lambda_rule(n):
        den = (a - n - 1) * (a - n)
        if den == 0:
            raise PoleError(f"L-Jacobi: (a-n-1)(a-n) = 0 at n={n}")
        return n * (c + n - a) / den

    return CoefficientSequences(
        name='ljacobi', c_rule=c_rule, lambda_rule=lambda_rule,
        a_rule=lambda n: Fraction(0), mode=mode,
        positive_L=ljacobi_positive(a, c, N), params=(('a', a), ('c', c)),
    )


def hypergeometric_oracle(a: Scalar, c: Scalar, n: int, x: Scalar) -> Scalar:
    """((c)_n/(1-a)_n) · F(-n, 1-a; 1-c-n; x)"""
    den = pochhammer(1 - a, n)
    if den == 0:
        raise PoleError(f"(1-a)_{n} = 0 for a={a}")
    return pochhammer(c, n) / den * terminating_2f1(n, 1 - a, 1 - c - n, x)


def hyper2_oracle(b: Scalar, c: Scalar, n: int, z: Scalar) -> Scalar:
    """((c)_n/(b)_n) · F(-n, b; c; 1-z)，对应 sequences.hyper2"""
    den = pochhammer(b, n)
    if den == 0:
        raise PoleError(f"(b)_{n} = 0 for b={b}")
    return pochhammer(c, n) / den * terminating_2f1(n, b, c, 1 - z)
