"""
δ 参数序列（Verblunsky 型系数）

- delta_from_chain: δ_{n+1} = (1 - 4d_{n+1}) / (2δ_n)
- perturbed_delta:  第 k+1 层 co-dilation d̂_{k+1} = ν d_{k+1} 后的 δ̂
- caratheodory_*:   δ_n = -1/(n+γ), γ = σ/(1-σ) 的显式族
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from src.core.errors import DeltaZeroError, DomainError, ModulusViolationError, SequenceIndexError
from src.core.scalar import RATIONAL, Scalar, to_scalar
from src.chainseq.chain import ChainSequence, as_chain

ORIGINS = ('explicit', 'from-chain', 'from-phi')


def modulus_sq(x: Scalar) -> Scalar:
    return x * x.conjugate()


@dataclass(frozen=True)
class VerblunskySeq:
    """δ_start, δ_start+1, ...，要求 n >= 1 处 |δ_n| < 1"""
    delta: Tuple
    origin: str = 'explicit'
    start: int = 1

    def __post_init__(self):
        if self.origin not in ORIGINS:
            raise DomainError(f"未知来源 {self.origin!r}（可选 {ORIGINS}）")
        for j, v in enumerate(self.delta):
            n = self.start + j
            if n >= 1 and abs(v) >= 1:
                raise ModulusViolationError(f"|δ_{n}| = {abs(v)} >= 1")

    @property
    def last(self) -> int:
        return self.start + len(self.delta) - 1

    def at(self, n: int) -> Scalar:
        if not self.start <= n <= self.last:
            raise SequenceIndexError(f"δ_{n} 超出范围 [{self.start}, {self.last}]")
        return self.delta[n - self.start]

    def values(self, lo: int = 1) -> List[Scalar]:
        return [self.at(n) for n in range(max(lo, self.start), self.last + 1)]

    def to_json(self) -> dict:
        return {'start': self.start, 'origin': self.origin, 'delta': [str(v) for v in self.delta]}


def _step(delta_n: Scalar, d_next: Scalar, n: int) -> Scalar:
    if delta_n == 0:
        raise DeltaZeroError(f"δ_{n} = 0，无法继续 δ 递推")
    return (1 - 4 * d_next) / (2 * delta_n)


def delta_from_chain(delta0: Scalar, d, N: int, start: int = 1) -> VerblunskySeq:
    """由 δ_start = delta0 前向递推到 δ_N"""
    chain = as_chain(d)
    if N < start:
        raise DomainError(f"N={N} 必须 >= start={start}")
    values = [to_scalar(delta0, chain.mode)]
    for n in range(start, N):
        values.append(_step(values[-1], chain.d(n + 1), n))
    return VerblunskySeq(tuple(values), 'from-chain', start)


def delta_condition_holds(delta: VerblunskySeq, n: int) -> bool:
    """δ_{n+1}δ_n = δ_{n+1} - δ_n"""
    a, b = delta.at(n), delta.at(n + 1)
    return b * a == b - a


def delta_condition_residual(delta: VerblunskySeq) -> Scalar:
    """max_n |δ_{n+1}δ_n - (δ_{n+1} - δ_n)|，n >= 1"""
    lo = max(delta.start, 1)
    residuals = [abs(delta.at(n + 1) * delta.at(n) - (delta.at(n + 1) - delta.at(n)))
                 for n in range(lo, delta.last)]
    return max(residuals, default=Fraction(0))


def chain_from_delta_residual(delta: VerblunskySeq, d) -> Dict[str, object]:
    """δ 条件成立的 n 上检查 d_{n+1} = (1/4)(1+δ_n)(1-δ_{n+1})"""
    chain = as_chain(d)
    checked, worst = [], Fraction(0)
    for n in range(max(delta.start, 1), delta.last):
        if delta_condition_holds(delta, n):
            expected = (1 + delta.at(n)) * (1 - delta.at(n + 1)) / 4
            worst = max(worst, abs(chain.d(n + 1) - expected))
            checked.append(n)
    return {'checked': checked, 'max_residual': worst}


def perturbed_delta(delta: VerblunskySeq, d, k: int, nu: Scalar, N: int) -> VerblunskySeq:
    """δ̂_n = δ_n (n <= k), δ̂_{k+1} = δ_{k+1} + 2(1-ν)d_{k+1}/δ_k, 之后按 δ 递推"""
    chain = as_chain(d)
    nu = to_scalar(nu, chain.mode)
    if k < delta.start or k + 1 > delta.last:
        raise DomainError(f"需要 δ_{k} 与 δ_{k + 1}（已知范围 [{delta.start}, {delta.last}]）")
    if N < k + 1:
        raise DomainError(f"N={N} 必须 >= k+1={k + 1}")
    dk = delta.at(k)
    if dk == 0:
        raise DeltaZeroError(f"δ_{k} = 0")
    values = [delta.at(n) for n in range(delta.start, k + 1)]
    values.append(delta.at(k + 1) + 2 * (1 - nu) * chain.d(k + 1) / dk)
    for n in range(k + 1, N):
        values.append(_step(values[-1], chain.d(n + 1), n))
    return VerblunskySeq(tuple(values), delta.origin, delta.start)


def perturbed_delta_direct(delta: VerblunskySeq, d, k: int, nu: Scalar) -> Scalar:
    """(1 - 4ν d_{k+1}) / (2δ_k)"""
    chain = as_chain(d)
    return _step(delta.at(k), to_scalar(nu, chain.mode) * chain.d(k + 1), k)


# ---- Carathéodory 族 -------------------------------------------------------

def gamma_from_sigma(sigma: Scalar) -> Fraction:
    sigma = Fraction(sigma)
    if not 0 < sigma < 1:
        raise DomainError(f"σ 必须在 (0,1) 内，收到 {sigma}")
    return sigma / (1 - sigma)


def caratheodory_delta(gamma: Scalar, N: int) -> VerblunskySeq:
    """δ_n = -1/(n+γ)，n = 1..N"""
    gamma = Fraction(gamma)
    if gamma <= 0:
        raise DomainError(f"γ 必须 > 0，收到 {gamma}")
    return VerblunskySeq(tuple(-1 / (n + gamma) for n in range(1, N + 1)), 'explicit', 1)


def caratheodory_chain(gamma: Scalar) -> ChainSequence:
    """d_{n+1} = (1/4)(1+δ_n)(1-δ_{n+1})；d_1 取 δ_0 = -1/γ"""
    gamma = Fraction(gamma)
    if gamma <= 0:
        raise DomainError(f"γ 必须 > 0，收到 {gamma}")

    def delta(n: int) -> Fraction:
        return -1 / (n + gamma)

    return ChainSequence('caratheodory', lambda n: (1 + delta(n - 1)) * (1 - delta(n)) / 4,
                         RATIONAL, params=(('gamma', gamma),))


def as_verblunsky(delta, origin: str = 'explicit') -> VerblunskySeq:
    if isinstance(delta, VerblunskySeq):
        return delta
    return VerblunskySeq(tuple(delta), origin, 1)
