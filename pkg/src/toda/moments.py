"""
含时矩泛函与 L-正交多项式系数

    L^(t)[x^m] = Σ_i w_i x_i^m exp(-t(p x_i + q/x_i))

R_n(x) = Σ_j a_{n,j} x^j（首一）满足 L^(t)[x^{-n+s} R_n] = 0, s = 0..n-1，
从而
    c_n = -a_{n,0}/a_{n-1,0},   λ_n = a_{n-1,n-2} - a_{n,n-1} - c_n
    R_{n+1} = (x - c_{n+1}) R_n - λ_{n+1} x R_{n-1}

矩与线性方程组在 mpmath 扩展精度下计算，主元检查用 scipy 的 LU 分解。
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import mpmath
import numpy as np
from scipy import linalg

from src.core.errors import DomainError, SequenceIndexError, SingularSystemError
from src.core.polynomial import Polynomial
from src.core.scalar import Scalar, is_exact

DEFAULT_DPS = 40
DEFAULT_PIVOT_TOL = 1e-12


def to_mpf(x) -> mpmath.mpf:
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


@dataclass(frozen=True)
class DiscreteMeasure:
    """Σ w_i δ(x - x_i)，节点与权重均为正"""
    nodes: Tuple
    weights: Tuple

    def __post_init__(self):
        if len(self.nodes) != len(self.weights) or not self.nodes:
            raise DomainError("节点与权重个数必须相同且非空")
        if any(x <= 0 for x in self.nodes) or any(w <= 0 for w in self.weights):
            raise DomainError("节点与权重必须为正")
        if len(set(self.nodes)) != len(self.nodes):
            raise DomainError("节点必须互不相同")

    @classmethod
    def uniform(cls, nodes: Sequence) -> 'DiscreteMeasure':
        return cls(tuple(nodes), tuple(Fraction(1) for _ in nodes))

    @property
    def M(self) -> int:
        return len(self.nodes)


def default_measure() -> DiscreteMeasure:
    """节点 1, 3/2, ..., 7/2，单位权重"""
    return DiscreteMeasure.uniform([Fraction(2 + j, 2) for j in range(6)])


@dataclass(frozen=True)
class TodaParams:
    p: Scalar = 1
    q: Scalar = 0
    t: Scalar = 0

    def at(self, t: Scalar) -> 'TodaParams':
        return replace(self, t=t)


def moment(measure: DiscreteMeasure, params: TodaParams, m: int) -> Scalar:
    """L^(t)[x^m]；指数因子恒为 1 且节点精确时返回 Fraction"""
    trivial = params.t == 0 or (params.p == 0 and params.q == 0)
    if trivial and all(is_exact(v) for v in measure.nodes + measure.weights):
        return sum((Fraction(w) * Fraction(x) ** m for x, w in zip(measure.nodes, measure.weights)),
                   Fraction(0))
    x = np.array([float(v) for v in measure.nodes])
    w = np.array([float(v) for v in measure.weights])
    p, q, t = float(params.p), float(params.q), float(params.t)
    return float(np.sum(w * x ** m * np.exp(-t * (p * x + q / x))))


def moment_mp(measure: DiscreteMeasure, params: TodaParams, m: int) -> mpmath.mpf:
    p, q, t = to_mpf(params.p), to_mpf(params.q), to_mpf(params.t)
    total = mpmath.mpf(0)
    for x, w in zip(measure.nodes, measure.weights):
        x, w = to_mpf(x), to_mpf(w)
        total += w * x ** m * mpmath.exp(-t * (p * x + q / x))
    return total


@dataclass(frozen=True)
class CoefficientFrame:
    """某一时刻的 c_0..c_N, λ_0..λ_N 及 a_{n,j}、σ

    c_0 = 1, λ_0 = -1（不进入任何方程）, λ_1 = 0。
    closed 为 True 时 N 等于测度节点数，格点在 λ_{N+1} = 0 处闭合。
    """
    t: Scalar
    c: Tuple
    lam: Tuple
    a_coeffs: Tuple = ()
    sigma_minus: Tuple = ()       # σ_{n,-1} = L[x^{-n-1} R_n]
    sigma_diag: Tuple = ()        # σ_{n,n}  = L[R_n]
    closed: bool = False

    @property
    def N(self) -> int:
        return len(self.c) - 1

    def c_at(self, n: int) -> Scalar:
        if 0 <= n <= self.N:
            return self.c[n]
        raise SequenceIndexError(f"帧中没有 c_{n}（N={self.N}）")

    def lam_at(self, n: int) -> Scalar:
        if 0 <= n <= self.N:
            return self.lam[n]
        if self.closed and n == self.N + 1:
            return 0
        raise SequenceIndexError(f"帧中没有 λ_{n}（N={self.N}）")

    def with_values(self, c: Sequence, lam: Sequence, t: Scalar = None) -> 'CoefficientFrame':
        return CoefficientFrame(self.t if t is None else t, tuple(c), tuple(lam),
                                closed=self.closed)

    def state(self) -> np.ndarray:
        """[c_1..c_N, λ_2..λ_N] 浮点向量"""
        return np.array([float(v) for v in self.c[1:]] + [float(v) for v in self.lam[2:]])

    @classmethod
    def from_state(cls, state: np.ndarray, t: Scalar, closed: bool) -> 'CoefficientFrame':
        N = (len(state) + 1) // 2
        c = (1.0,) + tuple(float(v) for v in state[:N])
        lam = (-1.0, 0.0) + tuple(float(v) for v in state[N:])
        return cls(t, c, lam, closed=closed)

    def R_polynomials(self) -> List[Polynomial]:
        return [Polynomial(tuple(float(v) for v in row)) for row in self.a_coeffs]

    def to_json(self) -> dict:
        return {
            't': float(self.t),
            'c': [float(v) for v in self.c],
            'lambda': [float(v) for v in self.lam],
            'closed': self.closed,
        }


def _check_pivots(matrix, n: int, pivot_tol: float):
    dense = np.array([[float(matrix[i, j]) for j in range(n)] for i in range(n)])
    lu, _ = linalg.lu_factor(dense, check_finite=True)
    scale = max(1.0, float(np.max(np.abs(dense))))
    if np.min(np.abs(np.diag(lu))) < pivot_tol * scale:
        raise SingularSystemError(f"{n}×{n} 矩系统奇异（主元 < {pivot_tol}·max|entry|）")


def coeffs_from_moments(measure: DiscreteMeasure, params: TodaParams, N: int,
                        dps: int = DEFAULT_DPS, pivot_tol: float = DEFAULT_PIVOT_TOL) -> CoefficientFrame:
    """由矩恢复 c_1..c_N, λ_2..λ_N，N <= M（N = M 时帧闭合）

    Args:
        measure: 离散测度
        params: (p, q, t)
        N: 最高下标
        dps: mpmath 十进制精度
        pivot_tol: 奇异性阈值
    """
    if N < 1:
        raise DomainError(f"N={N} 必须 >= 1")
    if N > measure.M:
        raise DomainError(f"N={N} 超过测度节点数 M={measure.M}")
    with mpmath.workdps(dps):
        mom = {m: moment_mp(measure, params, m) for m in range(-N - 1, N + 1)}
        rows = [[mpmath.mpf(1)]]
        for n in range(1, N + 1):
            A = mpmath.matrix(n, n)
            b = mpmath.matrix(n, 1)
            for s in range(n):
                for j in range(n):
                    A[s, j] = mom[j - n + s]
                b[s] = -mom[s]
            _check_pivots(A, n, pivot_tol)
            sol = mpmath.lu_solve(A, b)
            rows.append([sol[j] for j in range(n)] + [mpmath.mpf(1)])

        c = [mpmath.mpf(1)]
        lam = [mpmath.mpf(-1), mpmath.mpf(0)]
        for n in range(1, N + 1):
            c.append(-rows[n][0] / rows[n - 1][0])
        for n in range(2, N + 1):
            lam.append(rows[n - 1][n - 2] - rows[n][n - 1] - c[n])
        sigma_minus = [sum(rows[n][j] * mom[j - n - 1] for j in range(n + 1)) for n in range(N + 1)]
        sigma_diag = [sum(rows[n][j] * mom[j] for j in range(n + 1)) for n in range(N + 1)]
    return CoefficientFrame(
        t=params.t, c=tuple(c), lam=tuple(lam), a_coeffs=tuple(tuple(r) for r in rows),
        sigma_minus=tuple(sigma_minus), sigma_diag=tuple(sigma_diag), closed=(N == measure.M),
    )


def recurrence_residual(frame: CoefficientFrame) -> float:
    """max |R_{n+1} - (x - c_{n+1}) R_n + λ_{n+1} x R_{n-1}| 的系数"""
    R = frame.R_polynomials()
    worst = 0.0
    for n in range(len(R) - 1):
        prev = R[n - 1] if n >= 1 else Polynomial.zero()
        rhs = Polynomial.linear(float(frame.c[n + 1])) * R[n] - (prev * float(frame.lam[n + 1])).shift_degree(1)
        diff = R[n + 1] - rhs
        worst = max([worst] + [float(abs(v)) for v in diff.coeffs])
    return worst


def sigma_residuals(frame: CoefficientFrame) -> dict:
    """σ_{n,-1} = -(λ_{n+1}/c_{n+1}) σ_{n-1,-1}，σ_{n,n} = λ_{n+1} σ_{n-1,n-1} 的相对残差"""
    out = {'sigma_minus': 0.0, 'sigma_diag': 0.0}
    for n in range(1, frame.N):
        lam, c = frame.lam[n + 1], frame.c[n + 1]
        exp_m = -(lam / c) * frame.sigma_minus[n - 1]
        exp_d = lam * frame.sigma_diag[n - 1]
        out['sigma_minus'] = max(out['sigma_minus'],
                                 float(abs(frame.sigma_minus[n] - exp_m) / max(abs(exp_m), 1e-300)))
        out['sigma_diag'] = max(out['sigma_diag'],
                                float(abs(frame.sigma_diag[n] - exp_d) / max(abs(exp_d), 1e-300)))
    return out


def a_n0_residual(frame: CoefficientFrame) -> float:
    """a_{n,0} = (-1)^n c_n ··· c_1 的相对残差"""
    worst = 0.0
    prod = 1
    for n in range(1, len(frame.a_coeffs)):
        prod = -prod * frame.c[n]
        worst = max(worst, float(abs(frame.a_coeffs[n][0] - prod) / abs(prod)))
    return worst
