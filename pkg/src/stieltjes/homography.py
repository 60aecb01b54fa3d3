"""
扰动前后 Stieltjes 函数之间的分式线性变换

记 Π_k = ∏_{j=1}^{k} λ_j(z-a_j)，L_j = λ_j(z-a_j)，f 为未扰动 R_I-fraction，
f̃ 为扰动后的 R_I-fraction，t 为从 c_{k+1} 开始的尾部连分式。

- homography_from_tail: f̃ = (L_{k+1}Q_k t - Q̃_{k+1}) / (L_{k+1}P_k t - P̃_{k+1})
- homography_from_full: f̃ = (A f + B)/(C f + D)，A..D 由 S_k、Ŝ_k 组合得到
- tail_from_full:       L_{k+1} t = (P_{k+1} f - Q_{k+1}) / (P_k f - Q_k)
- cofactor_transform:   cof(M_k)，与 homography_from_full 等价

所有关系都在有限截断深度上作为精确有理恒等式检验。
"""

from typing import Dict, Tuple

from src.core.errors import DomainError, PoleError
from src.core.homography import Homography
from src.core.polynomial import Polynomial
from src.core.recurrence import generate_family, generate_second_kind, lambda_w_product
from src.core.scalar import Scalar
from src.core.sequences import CoefficientSequences
from src.perturbation.perturbation import (
    Perturbation,
    apply_perturbation,
    perturbed_family_direct,
    perturbed_second_kind_direct,
)
from src.perturbation.representation import calibrate_convention
from src.perturbation.transfer import transfer_matrix_Mk
from src.stieltjes.fraction import convergent, ri_fraction, screen_point, tail_fraction

# homography_from_full 中修正项相对常见写法的符号。
# 在 c_k → c_k + μ 下 B = +μ Q_k²（由截断恒等式确定）。
CORRECTION_SIGN = -1
SIGN_CANDIDATES = (1, -1)


def _pieces(seqs: CoefficientSequences, k: int):
    P = generate_family(seqs, k + 1)
    Q = generate_second_kind(seqs, k + 1)
    P_prev = P[k - 1] if k >= 1 else Polynomial.zero()
    Q_prev = Q[k - 1] if k >= 1 else Polynomial.zero()
    return P, Q, P_prev, Q_prev


def homography_from_tail(seqs: CoefficientSequences, pert: Perturbation) -> Homography:
    """A = L_{k+1}Q_k, B = -Q̃_{k+1}, C = L_{k+1}P_k, D = -P̃_{k+1}"""
    k = pert.k
    P_t = perturbed_family_direct(seqs, pert, k + 1)
    Q_t = perturbed_second_kind_direct(seqs, pert, k + 1)
    P, Q, _, _ = _pieces(seqs, k)
    L = seqs.lam_w(k + 1)
    return Homography(L * Q[k], -Q_t[k + 1], L * P[k], -P_t[k + 1]).require_nondegenerate()


def homography_from_full(seqs: CoefficientSequences, pert: Perturbation,
                         sign: int = CORRECTION_SIGN) -> Homography:
    """A = Π_k + σ[(ν-1)L_k Q_{k-1}P_k + μ Q_k P_k]
    B = -σ[(ν-1)L_k Q_{k-1}Q_k + μ Q_k²]
    C =  σ[(ν-1)L_k P_{k-1}P_k + μ P_k²]
    D = Π_k - σ[(ν-1)L_k P_{k-1}Q_k + μ Q_k P_k]
    """
    k = pert.k
    P, Q, P_prev, Q_prev = _pieces(seqs, k)
    pi = lambda_w_product(seqs, 1, k)
    dil = seqs.lam_w(k) * (pert.nu - 1) if k >= 1 else Polynomial.zero()
    mu = pert.mu
    A = pi + (dil * Q_prev * P[k] + Q[k] * P[k] * mu) * sign
    B = -(dil * Q_prev * Q[k] + Q[k] * Q[k] * mu) * sign
    C = (dil * P_prev * P[k] + P[k] * P[k] * mu) * sign
    D = pi - (dil * P_prev * Q[k] + Q[k] * P[k] * mu) * sign
    return Homography(A, B, C, D).require_nondegenerate()


def cofactor_transform(seqs: CoefficientSequences, pert: Perturbation) -> Homography:
    """cof(M_k)"""
    return transfer_matrix_Mk(seqs, pert).cofactor().require_nondegenerate()


def tail_from_full(seqs: CoefficientSequences, k: int) -> Homography:
    """f ↦ t: [[P_{k+1}, -Q_{k+1}], [L_{k+1}P_k, -L_{k+1}Q_k]]"""
    P, Q, _, _ = _pieces(seqs, k)
    L = seqs.lam_w(k + 1)
    return Homography(P[k + 1], -Q[k + 1], L * P[k], -(L * Q[k])).require_nondegenerate()


# ---- 截断恒等式 -----------------------------------------------------------

def tail_law_residual(seqs: CoefficientSequences, pert: Perturbation, z: Scalar, m: int) -> Scalar:
    """f̃_{k+1+m}(z) - H_tail(t_m(z))"""
    k = pert.k
    perturbed = ri_fraction(apply_perturbation(seqs, pert))
    tail = tail_fraction(seqs, k)
    H = homography_from_tail(seqs, pert)
    return convergent(perturbed, z, k + 1 + m) - H.apply(convergent(tail, z, m), z)


def full_law_residual(seqs: CoefficientSequences, pert: Perturbation, z: Scalar, N: int,
                      sign: int = CORRECTION_SIGN) -> Scalar:
    """f̃_N(z) - H_full(f_N(z))，N >= k+1"""
    if N < pert.k + 1:
        raise DomainError(f"需要 N >= k+1 (N={N}, k={pert.k})")
    perturbed = ri_fraction(apply_perturbation(seqs, pert))
    H = homography_from_full(seqs, pert, sign)
    return convergent(perturbed, z, N) - H.apply(convergent(ri_fraction(seqs), z, N), z)


def tail_from_full_residual(seqs: CoefficientSequences, k: int, z: Scalar, m: int) -> Scalar:
    """L_{k+1} t_m - (P_{k+1}u - Q_{k+1})/(P_k u - Q_k)，u = f_{k+1+m}"""
    P, Q, _, _ = _pieces(seqs, k)
    u = convergent(ri_fraction(seqs), z, k + 1 + m)
    t = convergent(tail_fraction(seqs, k), z, m)
    return seqs.lam_w(k + 1)(z) * t - (P[k + 1](z) * u - Q[k + 1](z)) / (P[k](z) * u - Q[k](z))


def calibrate_full_sign(seqs: CoefficientSequences, pert: Perturbation, z: Scalar = 7,
                        depths: Tuple[int, ...] = (1, 2, 3)) -> int:
    """用截断恒等式确定 homography_from_full 修正项的符号"""
    k = pert.k
    fractions = [(ri_fraction(seqs), k + 1 + d) for d in depths]
    fractions += [(ri_fraction(apply_perturbation(seqs, pert)), k + 1 + d) for d in depths]
    z = screen_point(fractions, z)

    def holds(sign: int) -> bool:
        try:
            return all(full_law_residual(seqs, pert, z, k + 1 + d, sign) == 0 for d in depths)
        except (ZeroDivisionError, PoleError):
            return False

    return calibrate_convention(SIGN_CANDIDATES, holds, 'homography_from_full 符号')


def composition_consistent(seqs: CoefficientSequences, pert: Perturbation) -> bool:
    """H_full ≐ H_tail ∘ (f ↦ t)"""
    composed = homography_from_tail(seqs, pert) @ tail_from_full(seqs, pert.k)
    return composed.equivalent(homography_from_full(seqs, pert))


def cofactor_consistent(seqs: CoefficientSequences, pert: Perturbation) -> bool:
    return cofactor_transform(seqs, pert).equivalent(homography_from_full(seqs, pert))


def homography_summary(H: Homography) -> Dict[str, str]:
    return {'A': str(H.A), 'B': str(H.B), 'C': str(H.C), 'D': str(H.D)}
