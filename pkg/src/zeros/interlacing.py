"""
零点交错分析

- interlacing_report:       扰动/未扰动两组零点的交错模式
- consecutive_interlacing:  相邻次数 P_n、P_{n+1} 的零点交错
- zero_lemma_check:         positive_L 族零点实、单、正且交错
- common_zero_check:        公共零点必为 S_k 的零点
- sign_witness_corecursive: co-recursive 扰动下 D(P_n, P̃_n) 的闭式
- monotonicity_scan:        两层扰动下零点关于 (μ_k, μ_{k+1}) 的单调性
"""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from src.core.errors import DomainError
from src.core.polynomial import Polynomial
from src.core.recurrence import casoratti, generate_family
from src.core.scalar import Scalar
from src.core.sequences import CoefficientSequences
from src.perturbation.perturbation import (
    Perturbation,
    perturbed_family_direct,
    s_polynomials,
)
from src.perturbation.representation import calibrate_convention
from src.zeros.roots import DEFAULT_COMMON_TOL, DEFAULT_TOL, ZeroSet, real_zeros

A_STARTS = 'A-starts'
B_STARTS = 'B-starts'
VIOLATED = 'violated'


@dataclass(frozen=True)
class InterlacingReport:
    """A 为未扰动零点，B 为扰动零点"""
    common: Tuple[float, ...]
    pattern: str
    details: Tuple[Tuple[float, str], ...]

    @property
    def violated(self) -> bool:
        return self.pattern == VIOLATED

    def to_json(self) -> dict:
        return {
            'common': list(self.common),
            'pattern': self.pattern,
            'details': [{'x': x, 'tag': tag} for x, tag in self.details],
        }


def _is_common(x: float, y: float, tol: float) -> bool:
    return abs(x - y) <= tol * max(1.0, abs(x))


def interlacing_report(A: ZeroSet, B: ZeroSet, tol: float = DEFAULT_COMMON_TOL) -> InterlacingReport:
    """公共零点剔除后，检查剩余零点是否严格交替

    两组完全相同时没有非公共零点，按 A-starts 记（空交替）。
    """
    used = set()
    common = []
    only_a = []
    for x in A.zeros:
        match = next((j for j, y in enumerate(B.zeros)
                      if j not in used and _is_common(x, y, tol)), None)
        if match is None:
            only_a.append(x)
        else:
            used.add(match)
            common.append(x)
    only_b = [y for j, y in enumerate(B.zeros) if j not in used]

    merged = sorted([(x, 'A') for x in only_a] + [(y, 'B') for y in only_b])
    details = sorted(merged + [(x, 'common') for x in common])
    tags = [tag for _, tag in merged]
    alternating = all(t0 != t1 for t0, t1 in zip(tags, tags[1:]))
    if not alternating:
        pattern = VIOLATED
    elif tags and tags[0] == 'B':
        pattern = B_STARTS
    else:
        pattern = A_STARTS
    return InterlacingReport(tuple(common), pattern, tuple(details))


def expected_pattern(mu: Scalar) -> str:
    """μ < 0 扰动零点领先；μ > 0 未扰动零点领先"""
    return B_STARTS if mu < 0 else A_STARTS


def consecutive_interlacing(lower: ZeroSet, upper: ZeroSet) -> bool:
    """0 < y_1 < x_1 < y_2 < ... < x_n < y_{n+1}（x 为 P_n 零点，y 为 P_{n+1} 零点）"""
    x, y = lower.zeros, upper.zeros
    if len(y) != len(x) + 1 or not y or y[0] <= 0:
        return False
    for j, xj in enumerate(x):
        if not (y[j] < xj < y[j + 1]):
            return False
    return True


def zero_lemma_check(seqs: CoefficientSequences, n: int, tol: float = DEFAULT_TOL) -> Dict[str, bool]:
    """P_n 零点实、单、正，且与 P_{n+1} 零点交错"""
    family = generate_family(seqs, n + 1)
    zs = real_zeros(family[n], tol)
    zs_next = real_zeros(family[n + 1], tol)
    return {
        'real_simple': len(zs) == n,
        'positive': zs.all_positive,
        'interlacing': consecutive_interlacing(zs, zs_next),
    }


def common_zero_check(seqs: CoefficientSequences, pert: Perturbation, n: int,
                      tol: float = DEFAULT_TOL,
                      common_tol: float = DEFAULT_COMMON_TOL) -> Dict[str, object]:
    """P_n 与 P_n(·;μ,ν) 的公共零点都是 S_k 的零点"""
    A = real_zeros(generate_family(seqs, n)[n], tol, label='P_n')
    B = real_zeros(perturbed_family_direct(seqs, pert, n)[n], tol, label='P_n(mu,nu)')
    report = interlacing_report(A, B, common_tol)
    S, _ = s_polynomials(seqs, pert)
    s_zeros = real_zeros(S, tol).zeros if S.degree >= 1 else ()
    unexplained = [x for x in report.common
                   if not any(_is_common(x, s, 10 * common_tol) for s in s_zeros)]
    return {'common': list(report.common), 'S_zeros': list(s_zeros),
            'unexplained': unexplained, 'ok': not unexplained}


# ---- Casoratti 符号见证 ---------------------------------------------------

LOWER_INDEX_CANDIDATES = (0, 1)     # ∏ 从 λ_{k+off} 开始


def _witness_rhs(seqs: CoefficientSequences, pert: Perturbation, P: List[Polynomial],
                 n: int, lower_offset: int) -> Polynomial:
    """-μ_k P_k² x^{n-k} ∏_{j=k+off}^{n} λ_j"""
    k = pert.k
    prod = 1
    for j in range(k + lower_offset, n + 1):
        prod = prod * seqs.lam(j)
    return (P[k] * P[k]).shift_degree(n - k) * (-pert.mu * prod)


def calibrate_witness_index(seqs: CoefficientSequences, pert: Perturbation) -> int:
    """在 n = k, k+1, k+2 上确定 λ 乘积的起始下标偏移"""
    k = pert.k
    P = generate_family(seqs, k + 3)
    Pt = perturbed_family_direct(seqs, pert, k + 3)

    def holds(off: int) -> bool:
        return all((casoratti(P, Pt, m) - _witness_rhs(seqs, pert, P, m, off)).is_zero
                   for m in range(k, k + 3))

    return calibrate_convention(LOWER_INDEX_CANDIDATES, holds, 'D(P_n, P_n(mu))')


def sign_witness_corecursive(seqs: CoefficientSequences, pert: Perturbation, n: int) -> Scalar:
    """D(P_n, P_n(·;μ_k)) 与闭式之差的最大系数模（精确模式下为 0）"""
    if pert.nu != 1:
        raise DomainError("符号见证只适用于 co-recursive 扰动 (ν = 1)")
    if n < pert.k:
        raise DomainError(f"需要 n >= k (n={n}, k={pert.k})")
    if any(seqs.a(j) != 0 for j in range(1, n + 2)):
        raise DomainError("符号见证需要 a_n = 0 的族")
    if pert.is_identity:
        return 0
    off = calibrate_witness_index(seqs, pert)
    P = generate_family(seqs, n + 1)
    Pt = perturbed_family_direct(seqs, pert, n + 1)
    residual = casoratti(P, Pt, n) - _witness_rhs(seqs, pert, P, n, off)
    return max((abs(c) for c in residual.coeffs), default=0)


# ---- 单调性 ---------------------------------------------------------------

@dataclass
class MonotonicityScan:
    pairs: List[Tuple[Scalar, Scalar]]
    columns: List[ZeroSet]
    direction: str                    # 'increasing' | 'decreasing'
    monotone: bool
    failures: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            'pairs': [[float(a), float(b)] for a, b in self.pairs],
            'columns': [col.to_json() for col in self.columns],
            'direction': self.direction,
            'monotone': self.monotone,
            'failures': self.failures,
        }


def monotonicity_scan(seqs: CoefficientSequences, k: int, mu_pairs: Sequence[Tuple[Scalar, Scalar]],
                      n: int, tol: float = DEFAULT_TOL) -> MonotonicityScan:
    """对每组 (μ_k, μ_{k+1}) 求双层扰动 P_n 的零点，逐列检查严格单调"""
    signs = {(a > 0) - (a < 0) for pair in mu_pairs for a in pair if a != 0}
    if len(signs) > 1:
        raise DomainError(f"μ 对必须同号: {list(mu_pairs)}")
    direction = 'decreasing' if signs == {-1} else 'increasing'
    columns = []
    for mu_k, mu_k1 in mu_pairs:
        perts = [Perturbation(k, mu_k), Perturbation(k + 1, mu_k1)]
        P = perturbed_family_direct(seqs, perts, n)[n]
        columns.append(real_zeros(P, tol, label=f'({mu_k}, {mu_k1})'))

    failures = []
    for left, right in zip(columns, columns[1:]):
        if len(left) != len(right):
            failures.append(f"{left.label} → {right.label}: 零点个数不同")
            continue
        for j, (x0, x1) in enumerate(zip(left.zeros, right.zeros)):
            ok = x1 > x0 if direction == 'increasing' else x1 < x0
            if not ok:
                failures.append(f"{left.label} → {right.label}: 第 {j + 1} 个零点 {x0} → {x1}")
    return MonotonicityScan(list(mu_pairs), columns, direction, not failures, failures)
