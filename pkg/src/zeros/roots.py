"""
实零点求解

伴随矩阵特征值（scipy 平衡后求解）给初值，再做 Newton 打磨。
精确系数的多项式残差用 Fraction 在打磨后的浮点点上精确计算。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy import linalg

from src.core.errors import DomainError, MultipleZeroError, NonConvergenceError
from src.core.polynomial import Polynomial

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 20
DEFAULT_IMAG_TOL = 1e-6
DEFAULT_COMMON_TOL = 1e-7


@dataclass(frozen=True)
class ZeroSet:
    """升序实零点及残差 |P(x_j)|"""
    zeros: Tuple[float, ...]
    residuals: Tuple[float, ...]
    label: str = ''

    def __len__(self) -> int:
        return len(self.zeros)

    def __iter__(self):
        return iter(self.zeros)

    def as_array(self) -> np.ndarray:
        return np.array(self.zeros, dtype=float)

    @property
    def all_positive(self) -> bool:
        return all(x > 0 for x in self.zeros)

    def to_json(self) -> dict:
        return {'label': self.label, 'zeros': list(self.zeros), 'residuals': list(self.residuals)}


def _residual(p: Polynomial, x: float) -> float:
    if p.is_exact:
        return float(abs(p(Fraction(x))))
    return float(abs(npoly.polyval(x, p.as_array())))


def _newton(p: Polynomial, x: float, bound: float, max_iter: int) -> Tuple[float, float]:
    coeffs = p.to_float().as_array().real
    dcoeffs = npoly.polyder(coeffs)
    res = _residual(p, x)
    for _ in range(max_iter):
        if res <= bound:
            break
        slope = npoly.polyval(x, dcoeffs)
        if slope == 0:
            break
        x = x - npoly.polyval(x, coeffs) / slope
        res = _residual(p, x)
    return x, res


def real_zeros(p: Polynomial, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER,
               imag_tol: float = DEFAULT_IMAG_TOL, distinct_tol: float = DEFAULT_COMMON_TOL,
               label: str = '') -> ZeroSet:
    """p 的全部实零点

    Args:
        p: 非常数多项式
        tol: 残差要求 |p(x)| <= tol·max(1, ‖p‖₁)
        max_iter: Newton 最大迭代次数
        imag_tol: 特征值虚部小于 imag_tol·max(1,|λ|) 视为实根
        distinct_tol: 两个零点相距小于该相对距离视为重根

    Returns:
        ZeroSet
    """
    if p.degree < 1:
        raise DomainError(f"零点求解需要非常数多项式，收到 degree={p.degree}")
    coeffs = p.to_float().as_array().real
    coeffs = coeffs / coeffs[-1]
    if p.degree == 1:
        eig = np.array([-coeffs[0]])
    else:
        balanced, _ = linalg.matrix_balance(npoly.polycompanion(coeffs))
        eig = linalg.eigvals(balanced)
    bound = tol * max(1.0, p.norm1())

    found: List[Tuple[float, float]] = []
    for lam in eig:
        if abs(lam.imag) > imag_tol * max(1.0, abs(lam)):
            continue
        x, res = _newton(p, float(lam.real), bound, max_iter)
        if res > bound:
            raise NonConvergenceError(f"x≈{x}: 残差 {res:.3e} > {bound:.3e}")
        found.append((x, res))
    found.sort()
    for (x0, _), (x1, _) in zip(found, found[1:]):
        if x1 - x0 <= distinct_tol * max(1.0, abs(x0)):
            raise MultipleZeroError(f"疑似重根: {x0} 与 {x1}")
    return ZeroSet(tuple(x for x, _ in found), tuple(r for _, r in found), label)
