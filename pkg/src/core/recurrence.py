"""
R_I 递推: 族生成、第二类多项式、转移矩阵与 Casoratti 行列式

约定:
- generate_family(seqs, N, shift) 返回 [F_0 .. F_N]，
  F_{m+1} = (z - c_{m+shift}) F_m - λ_{m+shift}(z - a_{m+shift}) F_{m-1}
- shift = 0 即 P_n；shift = k 即 k 阶相伴族
- 第二类多项式 Q_0 = 0, Q_1 = 1，其后同一递推
"""

from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple, Union

from src.core.errors import DomainError, ZeroLambdaError
from src.core.polynomial import Polynomial, poly_matrix_product
from src.core.sequences import CoefficientSequences
from src.core.scalar import Scalar


def _step(seqs: CoefficientSequences, idx: int, cur: Polynomial, prev: Polynomial) -> Polynomial:
    nxt = Polynomial.linear(seqs.c(idx)) * cur
    if prev.is_zero:
        return nxt
    lam = seqs.lam(idx)
    if lam == 0:
        raise ZeroLambdaError(f"{seqs.describe()}: λ_{idx} = 0")
    return nxt - prev * seqs.lam_w(idx)


def generate_family(seqs: CoefficientSequences, N: int, shift: int = 0) -> List[Polynomial]:
    """生成 [F_0 .. F_N]

    Args:
        seqs: 系数序列
        N: 最高次数
        shift: 相伴族阶数（系数下标整体右移）

    Returns:
        首一多项式列表，deg F_m = m
    """
    if N < 0 or shift < 0:
        raise DomainError(f"N={N}, shift={shift} 必须非负")
    prev, cur = Polynomial.zero(), Polynomial.one()
    out = [cur]
    for m in range(N):
        prev, cur = cur, _step(seqs, m + shift, cur, prev)
        out.append(cur)
    return out


def generate_second_kind(seqs: CoefficientSequences, N: int, shift: int = 0) -> List[Polynomial]:
    """第二类多项式 [Q_0 .. Q_N]，Q_0 = 0, Q_1 = 1，deg Q_n = n - 1"""
    if N < 0 or shift < 0:
        raise DomainError(f"N={N}, shift={shift} 必须非负")
    out = [Polynomial.zero()]
    if N == 0:
        return out
    prev, cur = Polynomial.zero(), Polynomial.one()
    out.append(cur)
    for m in range(1, N):
        prev, cur = cur, _step(seqs, m + shift, cur, prev)
        out.append(cur)
    return out


def evaluate(p: Polynomial, z: Scalar) -> Scalar:
    """Horner 求值"""
    return p(z)


# ---- 转移矩阵 ------------------------------------------------------------

@dataclass(frozen=True)
class TransferMatrix:
    """2×2 多项式矩阵 ((m11, m12), (m21, m22))"""
    entries: Tuple[Tuple[Polynomial, Polynomial], Tuple[Polynomial, Polynomial]]

    @classmethod
    def identity(cls) -> 'TransferMatrix':
        one, zero = Polynomial.one(), Polynomial.zero()
        return cls(((one, zero), (zero, one)))

    def __matmul__(self, other: 'TransferMatrix') -> 'TransferMatrix':
        return TransferMatrix(poly_matrix_product(self.entries, other.entries))

    def det(self) -> Polynomial:
        (a, b), (c, d) = self.entries
        return a * d - b * c

    def apply(self, vec: Tuple[Polynomial, Polynomial]) -> Tuple[Polynomial, Polynomial]:
        (a, b), (c, d) = self.entries
        u, v = vec
        return a * u + b * v, c * u + d * v


def transfer_step(seqs: CoefficientSequences, n: int) -> TransferMatrix:
    """A_n = [[z - c_n, -λ_n(z - a_n)], [1, 0]]；n = 0 时右上角为 0（λ_0 = 0）"""
    if n < 0:
        raise DomainError(f"n={n} 必须非负")
    if n > 0 and seqs.lam(n) == 0:
        raise ZeroLambdaError(f"{seqs.describe()}: λ_{n} = 0")
    return TransferMatrix((
        (Polynomial.linear(seqs.c(n)), -seqs.lam_w(n)),
        (Polynomial.one(), Polynomial.zero()),
    ))


def cumulative_transfer(seqs: CoefficientSequences, n: int) -> TransferMatrix:
    """A_n · A_{n-1} ··· A_0；作用在 (1, 0)ᵀ 上得到 (P_{n+1}, P_n)ᵀ"""
    acc = TransferMatrix.identity()
    for j in range(n + 1):
        acc = transfer_step(seqs, j) @ acc
    return acc


# ---- Casoratti 行列式 ----------------------------------------------------

Indexable = Union[Sequence, Callable[[int], object]]


def _at(seq: Indexable, n: int):
    return seq(n) if callable(seq) else seq[n]


def casoratti(u: Indexable, v: Indexable, n: int):
    """D(u, v)_n = u_n v_{n+1} - u_{n+1} v_n（标量或多项式序列均可）"""
    return _at(u, n) * _at(v, n + 1) - _at(u, n + 1) * _at(v, n)


def lambda_w_product(seqs: CoefficientSequences, lo: int, hi: int) -> Polynomial:
    """∏_{j=lo}^{hi} λ_j (z - a_j)，空积为 1"""
    acc = Polynomial.one()
    for j in range(lo, hi + 1):
        acc = acc * seqs.lam_w(j)
    return acc


def casoratti_identity_residual(seqs: CoefficientSequences, k: int, n: int) -> Polynomial:
    """P_n F_{n-k+1} - P_{n+1} F_{n-k} - [∏_{j=k}^{n} λ_j(z-a_j)] P_{k-1}

    F 为 shift = k 的相伴族；k >= 1, n >= k - 1。恒为零多项式。
    """
    if k < 1 or n < k - 1:
        raise DomainError(f"需要 k >= 1 且 n >= k-1，收到 k={k}, n={n}")
    P = generate_family(seqs, n + 1)
    F = generate_family(seqs, n - k + 1, shift=k)
    shifted = lambda m: F[m - k] if m >= k else Polynomial.zero()
    lhs = casoratti(P, shifted, n)
    return lhs - lambda_w_product(seqs, k, n) * P[k - 1]
