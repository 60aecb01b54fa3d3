"""
连分式与 R_I-fraction

    f = a_1/(b_1 + a_2/(b_2 + a_3/(b_3 + ...)))

部分分子 a_n、部分分母 b_n 都是多项式规则 n -> Polynomial（n >= 1）。
第 n 个渐近分式 A_n/B_n 由前向三项递推得到:
    A_n = b_n A_{n-1} + a_n A_{n-2},  A_{-1} = 1, A_0 = 0
    B_n = b_n B_{n-1} + a_n B_{n-2},  B_{-1} = 0, B_0 = 1
"""

from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

from src.core.errors import FractionPoleError
from src.core.polynomial import Polynomial
from src.core.scalar import Scalar
from src.core.sequences import CoefficientSequences

PolyRule = Callable[[int], Polynomial]


@dataclass(frozen=True)
class ContinuedFraction:
    numerator: PolyRule       # a_n
    denominator: PolyRule     # b_n
    label: str = ''


def wallis(cf: ContinuedFraction, depth: int, z: Scalar = None) -> List[Tuple]:
    """[(A_0, B_0), ..., (A_depth, B_depth)]

    z 为 None 时在多项式上递推，否则在标量 z 处递推。
    """
    if z is None:
        one, zero = Polynomial.one(), Polynomial.zero()
        at = lambda rule, n: rule(n)
    else:
        one, zero = 1, 0
        at = lambda rule, n: rule(n)(z)
    A_prev, A = one, zero
    B_prev, B = zero, one
    out = [(A, B)]
    for n in range(1, depth + 1):
        a, b = at(cf.numerator, n), at(cf.denominator, n)
        A_prev, A = A, b * A + a * A_prev
        B_prev, B = B, b * B + a * B_prev
        out.append((A, B))
    return out


def convergent(cf: ContinuedFraction, z: Scalar, depth: int) -> Scalar:
    """第 depth 个渐近分式 A_depth(z)/B_depth(z)；depth = 0 时为 0"""
    if depth == 0:
        return 0
    A, B = wallis(cf, depth, z)[-1]
    if B == 0:
        raise FractionPoleError(depth, z)
    return A / B


def _fraction_from(seqs: CoefficientSequences, offset: int, label: str) -> ContinuedFraction:
    def numerator(n: int) -> Polynomial:
        if n == 1:
            return Polynomial.one()
        return -seqs.lam_w(n - 1 + offset)

    def denominator(n: int) -> Polynomial:
        return Polynomial.linear(seqs.c(n - 1 + offset))

    return ContinuedFraction(numerator, denominator, label)


def ri_fraction(seqs: CoefficientSequences) -> ContinuedFraction:
    """1/(z - c_0 - λ_1(z - a_1)/(z - c_1 - λ_2(z - a_2)/(...)))，第 n 个渐近分式为 Q_n/P_n"""
    return _fraction_from(seqs, 0, f'R_I[{seqs.describe()}]')


def tail_fraction(seqs: CoefficientSequences, k: int) -> ContinuedFraction:
    """从 c_{k+1} 开始的尾部连分式"""
    return _fraction_from(seqs, k + 1, f'R_I^({k + 1})[{seqs.describe()}]')


def first_vanishing_denominator(cf: ContinuedFraction, z: Scalar, depth: int) -> int:
    """返回第一个 B_n(z) = 0 的 n（1..depth），全部非零时返回 0"""
    for n, (_, B) in enumerate(wallis(cf, depth, z)):
        if n >= 1 and B == 0:
            return n
    return 0


def screen_point(fractions: Sequence[Tuple[ContinuedFraction, int]], z: Scalar,
                 retries: int = 5) -> Scalar:
    """保证所有 (连分式, 深度) 在 z 处各层分母非零；命中时 z += 1 重试"""
    for _ in range(retries + 1):
        hit = next(((cf, n) for cf, depth in fractions
                    for n in [first_vanishing_denominator(cf, z, depth)] if n), None)
        if hit is None:
            return z
        z = z + 1
    cf, n = hit
    raise FractionPoleError(n, z, f"{cf.label}: 重试 {retries} 次后第 {n} 层分母仍为零")


def large_z_trend(cf: ContinuedFraction, depth: int, points: Sequence[float] = (1e3, 1e4, 1e5)) -> List[float]:
    """z·f_depth(z)，z → ∞ 时应趋于 1"""
    return [float(z * convergent(cf, z, depth)) for z in points]
