"""
转移矩阵 M_k

    Π_k (P̃_n, -Q̃_n)ᵀ = M_k (P_n, -Q_n)ᵀ,   n >= k
    Π_k = ∏_{j=1}^{k} λ_j (z - a_j)
    M_k = [[Π_k + S_k Q_k,  S_k P_k], [Q_k Ŝ_k,  Ŝ_k P_k + Π_k]]
    det M_k = Π_k (Π_k + S_k Q_k + Ŝ_k P_k)
"""

from typing import Tuple

from src.core.homography import Homography
from src.core.polynomial import Polynomial
from src.core.recurrence import generate_family, generate_second_kind, lambda_w_product
from src.core.sequences import CoefficientSequences
from src.core.errors import DomainError
from src.perturbation.perturbation import (
    Perturbation,
    perturbed_family_direct,
    perturbed_second_kind_direct,
    s_polynomials,
)


def transfer_matrix_Mk(seqs: CoefficientSequences, pert: Perturbation) -> Homography:
    k = pert.k
    P = generate_family(seqs, k)
    Q = generate_second_kind(seqs, k)
    S, S_hat = s_polynomials(seqs, pert)
    pi = lambda_w_product(seqs, 1, k)
    return Homography(
        pi + S * Q[k],
        S * P[k],
        Q[k] * S_hat,
        S_hat * P[k] + pi,
    )


def expected_det_Mk(seqs: CoefficientSequences, pert: Perturbation) -> Polynomial:
    """Π_k (Π_k + S_k Q_k + Ŝ_k P_k)"""
    k = pert.k
    P = generate_family(seqs, k)
    Q = generate_second_kind(seqs, k)
    S, S_hat = s_polynomials(seqs, pert)
    pi = lambda_w_product(seqs, 1, k)
    return pi * (pi + S * Q[k] + S_hat * P[k])


def transfer_identity_residual(seqs: CoefficientSequences, pert: Perturbation,
                               n: int) -> Tuple[Polynomial, Polynomial]:
    """Π_k (P̃_n, -Q̃_n) - M_k (P_n, -Q_n)，n >= k 时两分量恒为零"""
    if n < pert.k:
        raise DomainError(f"转移恒等式只对 n >= k 成立 (n={n}, k={pert.k})")
    P = generate_family(seqs, n)
    Q = generate_second_kind(seqs, n)
    P_t = perturbed_family_direct(seqs, pert, n)
    Q_t = perturbed_second_kind_direct(seqs, pert, n)
    M = transfer_matrix_Mk(seqs, pert)
    pi = lambda_w_product(seqs, 1, pert.k)
    top = pi * P_t[n] - (M.A * P[n] - M.B * Q[n])
    bottom = -(pi * Q_t[n]) - (M.C * P[n] - M.D * Q[n])
    return top, bottom
