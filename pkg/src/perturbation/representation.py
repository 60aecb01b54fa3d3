"""
扰动族用未扰动族表示

    P̃_n = P_n - S_k · F_{n-k-d}      F 为 (k+s) 阶相伴族
    Q̃_n = Q_n + Ŝ_k · F_{n-k-d}

(s, d) 由 calibrate_shift 对照直接递推确定；下标为负时修正项为 0。
对一般族只有 (s, d) = (1, 1) 成立；常系数族上多个候选同时成立。
"""

from dataclasses import dataclass
from typing import Callable, Iterable, List, Sequence, TypeVar

import numpy as np

from src.core.errors import CalibrationError, DomainError
from src.core.polynomial import Polynomial
from src.core.recurrence import generate_family, generate_second_kind
from src.core.scalar import Scalar
from src.core.sequences import CoefficientSequences
from src.perturbation.perturbation import (
    Perturbation,
    Perturbations,
    apply_perturbation,
    as_list,
    perturbed_family_direct,
    s_polynomials,
)

T = TypeVar('T')


@dataclass(frozen=True)
class ShiftConvention:
    """相伴族阶数 k + shift_offset，下标 n - k - index_offset"""
    shift_offset: int
    index_offset: int

    def describe(self, k: int) -> str:
        return f"P^({k + self.shift_offset})_(n-{k + self.index_offset})"


SHIFT_CANDIDATES = (
    ShiftConvention(0, 0),
    ShiftConvention(0, 1),
    ShiftConvention(1, 0),
    ShiftConvention(1, 1),
)


def calibrate_convention(candidates: Iterable[T], holds: Callable[[T], bool], what: str) -> T:
    """返回第一个使 holds 成立的候选约定，全部失败时抛 CalibrationError"""
    tried = []
    for cand in candidates:
        if holds(cand):
            return cand
        tried.append(cand)
    raise CalibrationError(f"{what}: 候选约定 {tried} 都无法复现直接递推")


def _correction(F: Sequence[Polynomial], j: int) -> Polynomial:
    return F[j] if 0 <= j < len(F) else Polynomial.zero()


def calibrate_shift(seqs: CoefficientSequences, pert: Perturbation,
                    tol: float = None) -> ShiftConvention:
    """在 n = k, k+1, k+2 上对照直接递推，确定相伴族的阶数与下标偏移"""
    k = pert.k
    direct = perturbed_family_direct(seqs, pert, k + 2)
    P = generate_family(seqs, k + 2)
    S, _ = s_polynomials(seqs, pert)

    def holds(conv: ShiftConvention) -> bool:
        F = generate_family(seqs, 2, shift=k + conv.shift_offset)
        for n in range(k, k + 3):
            rep = P[n] - S * _correction(F, n - k - conv.index_offset)
            if not rep.equals(direct[n], tol):
                return False
        return True

    return calibrate_convention(SHIFT_CANDIDATES, holds, f"{seqs.describe()} {pert.to_spec()}")


def _represent(base: CoefficientSequences, pert: Perturbation, family: List[Polynomial],
               N: int, tol: float) -> List[Polynomial]:
    conv = calibrate_shift(base, pert, tol)
    k = pert.k
    S, _ = s_polynomials(base, pert)
    F = generate_family(base, max(N - k - conv.index_offset, 0), shift=k + conv.shift_offset)
    return [family[n] - S * _correction(F, n - k - conv.index_offset) for n in range(N + 1)]


def perturbed_family_represented(seqs: CoefficientSequences, perts: Perturbations, N: int,
                                 tol: float = None) -> List[Polynomial]:
    """P_n(·;μ,ν) = P_n - S_k · 相伴族；多层扰动按 k 递增逐层套用"""
    if N < 0:
        raise DomainError(f"N={N} 必须非负")
    family = generate_family(seqs, N)
    base = seqs
    for pert in as_list(perts):
        family = _represent(base, pert, family, N, tol)
        base = apply_perturbation(base, pert)
    return family


def perturbed_second_kind_represented(seqs: CoefficientSequences, pert: Perturbation, N: int,
                                      tol: float = None) -> List[Polynomial]:
    """Q_n(·;μ,ν) = Q_n + Ŝ_k · 相伴族（与 P 同一约定）"""
    conv = calibrate_shift(seqs, pert, tol)
    k = pert.k
    _, S_hat = s_polynomials(seqs, pert)
    Q = generate_second_kind(seqs, N)
    F = generate_family(seqs, max(N - k - conv.index_offset, 0), shift=k + conv.shift_offset)
    return [Q[n] + S_hat * _correction(F, n - k - conv.index_offset) for n in range(N + 1)]


# ---- 常系数族 c ≡ 1, λ ≡ 1/4, a ≡ -1 的闭式 ------------------------------

def _example1_roots(z: Scalar):
    z = float(z)
    if z <= 3:
        raise DomainError(f"闭式只在 z > 3 时取实值，收到 z={z}")
    root = np.sqrt(z) * np.sqrt(z - 3)
    return (z - 1 + root) / 2, (z - 1 - root) / 2


def example1_closed_form(n: int, z: Scalar) -> float:
    """P_n(z) = (t₊^{n+1} - t₋^{n+1}) / (t₊ - t₋)，t± 为 t² - (z-1)t + (z+1)/4 的根"""
    tp, tm = _example1_roots(z)
    return (tp ** (n + 1) - tm ** (n + 1)) / (tp - tm)


def example1_corecursive_closed_form(n: int, z: Scalar, mu: Scalar = 1) -> float:
    """k = 0 co-recursive: P_n(z;μ) = P_n(z) - μ P_{n-1}(z)"""
    if n == 0:
        return 1.0
    return example1_closed_form(n, z) - float(mu) * example1_closed_form(n - 1, z)
