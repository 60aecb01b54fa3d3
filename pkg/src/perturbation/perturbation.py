"""
单层扰动

    c*_k = c_k + μ_k        (co-recursive, ν = 1)
    λ̃_k = ν_k λ_k          (co-dilated,   μ = 0)
两者同时出现时称 co-modified。

多个扰动位于不同层，按 k 递增依次作用。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from src.core.errors import DomainError, VacuousPerturbationError, ZeroLambdaError
from src.core.polynomial import Polynomial
from src.core.recurrence import generate_family, generate_second_kind
from src.core.scalar import Scalar, to_scalar
from src.core.sequences import CoefficientSequences


@dataclass(frozen=True)
class Perturbation:
    """(k, μ_k, ν_k)"""
    k: int
    mu: Scalar = Fraction(0)
    nu: Scalar = Fraction(1)

    def __post_init__(self):
        if self.k < 0:
            raise DomainError(f"扰动层 k={self.k} 必须非负")
        if self.nu <= 0:
            raise DomainError(f"ν_k 必须 > 0，收到 {self.nu}")

    @property
    def kind(self) -> str:
        if self.is_identity:
            return 'identity'
        if self.nu == 1:
            return 'co-recursive'
        if self.mu == 0:
            return 'co-dilated'
        return 'co-modified'

    @property
    def is_identity(self) -> bool:
        return self.mu == 0 and self.nu == 1

    def in_mode(self, mode: str) -> 'Perturbation':
        return Perturbation(self.k, to_scalar(self.mu, mode), to_scalar(self.nu, mode))

    def to_spec(self) -> str:
        return f"k={self.k},mu={self.mu},nu={self.nu}"


Perturbations = Union[Perturbation, Sequence[Perturbation]]


def as_list(perts: Perturbations) -> List[Perturbation]:
    """单个或多个扰动 → 按 k 递增的列表；层号必须互不相同"""
    items = [perts] if isinstance(perts, Perturbation) else list(perts)
    items.sort(key=lambda p: p.k)
    levels = [p.k for p in items]
    if len(set(levels)) != len(levels):
        raise DomainError(f"扰动层必须互不相同: {levels}")
    return items


def apply_perturbation(seqs: CoefficientSequences, pert: Perturbation) -> CoefficientSequences:
    """返回 c_k → c_k + μ_k、λ_k → ν_k λ_k 后的新序列"""
    k = pert.k
    if k == 0 and pert.nu != 1:
        raise VacuousPerturbationError("k=0 处的 co-dilation 无效: λ_0 不进入递推")
    c_new = {k: seqs.c(k) + pert.mu} if pert.mu != 0 else {}
    lam_new = {}
    if pert.nu != 1:
        lam = seqs.lam(k) * pert.nu
        if lam == 0:
            raise ZeroLambdaError(f"ν_k λ_k = 0 at k={k}")
        lam_new = {k: lam}
    if not c_new and not lam_new:
        return seqs
    return seqs.modified(c=c_new, lam=lam_new)


def apply_perturbations(seqs: CoefficientSequences, perts: Perturbations) -> CoefficientSequences:
    for pert in as_list(perts):
        seqs = apply_perturbation(seqs, pert)
    return seqs


def s_polynomials(seqs: CoefficientSequences, pert: Perturbation) -> Tuple[Polynomial, Polynomial]:
    """(S_k, Ŝ_k)

    S_k = μ_k P_k + (ν_k - 1) λ_k (z - a_k) P_{k-1}
    Ŝ_k = -μ_k Q_k - (ν_k - 1) λ_k (z - a_k) Q_{k-1}
    """
    k = pert.k
    P = generate_family(seqs, k)
    Q = generate_second_kind(seqs, k)
    P_prev = P[k - 1] if k >= 1 else Polynomial.zero()
    Q_prev = Q[k - 1] if k >= 1 else Polynomial.zero()
    if pert.nu != 1 and k >= 1:
        dil = seqs.lam_w(k) * (pert.nu - 1)
    else:
        dil = Polynomial.zero()
    S = P[k] * pert.mu + dil * P_prev
    S_hat = -(Q[k] * pert.mu) - dil * Q_prev
    return S, S_hat


def perturbed_family_direct(seqs: CoefficientSequences, perts: Perturbations, N: int) -> List[Polynomial]:
    """直接对扰动后的系数跑递推（基准）"""
    return generate_family(apply_perturbations(seqs, perts), N)


def perturbed_second_kind_direct(seqs: CoefficientSequences, perts: Perturbations,
                                 N: int) -> List[Polynomial]:
    """扰动后的第二类多项式，初值仍为 Q_0 = 0, Q_1 = 1"""
    return generate_second_kind(apply_perturbations(seqs, perts), N)


def perturbation_summary(perts: Iterable[Perturbation]) -> List[dict]:
    return [{'k': p.k, 'mu': p.mu, 'nu': p.nu, 'kind': p.kind} for p in perts]
