"""
扩展相对论 Toda 方程（含单层扰动）

未扰动方程:
    ċ_n = c_n [ p(λ_n - λ_{n+1}) + q(λ_{n+1}/(c_{n+1}c_n) - λ_n/(c_n c_{n-1})) ]
    λ̇_n = λ_n [ p(λ_{n-1} + c_{n-1} - λ_{n+1} - c_n) + q(1/c_{n-1} - 1/c_n) ]

扰动: 带帽系数来自真实矩泛函，满足未扰动方程；
    ĉ_{k+1} = c_{k+1} - μ(t),  λ̂_{k+1} = ν(t) λ_{k+1}，其余相同。
代入后得到不带帽变量的方程；下标 k+1 处额外出现 μ̇ 与 ν̇ 项。
c 方程只在 n ∈ {k, k+1, k+2} 改变；λ 方程在 ν ≡ 1 时只在 n ∈ {k+1, k+2} 改变，
ν ≠ 1 时 n = k 也改变。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Set, Tuple

import mpmath

from src.core.errors import DomainError, PoleError
from src.core.scalar import Scalar
from src.toda.moments import CoefficientFrame, TodaParams, to_mpf

TimeFn = Callable[[Scalar], Scalar]


def _zero(t):
    return 0


@dataclass(frozen=True)
class PerturbationSchedule:
    """第 k+1 层的 μ(t)、ν(t) 及其导数（调用方提供）"""
    k: int
    mu: TimeFn
    nu: TimeFn
    mu_dot: TimeFn = _zero
    nu_dot: TimeFn = _zero

    @classmethod
    def constant(cls, k: int, mu: Scalar = 0, nu: Scalar = 1) -> 'PerturbationSchedule':
        return cls(k, lambda t: mu, lambda t: nu)

    @property
    def level(self) -> int:
        return self.k + 1

    def at(self, t: Scalar) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        nu = self.nu(t)
        if nu <= 0:
            raise DomainError(f"ν(t) 必须 > 0，t={t} 处为 {nu}")
        return self.mu(t), nu, self.mu_dot(t), self.nu_dot(t)


def _like(frame: CoefficientFrame, values):
    """mpmath 帧上把 Fraction 转成 mpf"""
    if isinstance(frame.c[-1], mpmath.mpf):
        return tuple(to_mpf(v) if isinstance(v, Fraction) else v for v in values)
    return tuple(values)


def _div(num, den, what: str):
    if den == 0:
        raise PoleError(f"Toda 方程中 {what} = 0")
    return num / den


def _generic(C: Callable[[int], Scalar], L: Callable[[int], Scalar],
             params: TodaParams, n: int) -> Tuple[Scalar, Scalar]:
    p, q = params.p, params.q
    lam_n, lam_next = L(n), L(n + 1)
    c_prev, c_n = C(n - 1), C(n)

    c_term = p * (lam_n - lam_next)
    if q != 0:
        if lam_next != 0:
            c_term += q * _div(lam_next, C(n + 1) * c_n, f'c_{n + 1}c_{n}')
        if lam_n != 0:
            c_term -= q * _div(lam_n, c_n * c_prev, f'c_{n}c_{n - 1}')
    c_dot = c_n * c_term

    if lam_n == 0:
        return c_dot, 0 * lam_n
    lam_term = p * (L(n - 1) + c_prev - lam_next - c_n)
    if q != 0:
        lam_term += q * (_div(1, c_prev, f'c_{n - 1}') - _div(1, c_n, f'c_{n}'))
    return c_dot, lam_n * lam_term


def toda_rhs(frame: CoefficientFrame, params: TodaParams,
             sched: Optional[PerturbationSchedule], n: int) -> Tuple[Scalar, Scalar]:
    """(ċ_n, λ̇_n)，n >= 1；sched 为 None 时即未扰动方程"""
    if n < 1:
        raise DomainError(f"n={n} 必须 >= 1")
    if sched is None:
        return _generic(frame.c_at, frame.lam_at, params, n)

    level = sched.level
    mu, nu, mu_dot, nu_dot = _like(frame, sched.at(frame.t))

    def C(j):
        return frame.c_at(j) - mu if j == level else frame.c_at(j)

    def L(j):
        return nu * frame.lam_at(j) if j == level else frame.lam_at(j)

    c_dot, lam_dot = _generic(C, L, params, n)
    if n == level:
        c_dot = c_dot + mu_dot
        lam_dot = lam_dot / nu - frame.lam_at(n) * nu_dot / nu
    return c_dot, lam_dot


def affected_levels(k: int, dilation: bool) -> Tuple[Set[int], Set[int]]:
    """(c 方程改变的 n, λ 方程改变的 n)"""
    c_levels = {k, k + 1, k + 2}
    lam_levels = {k + 1, k + 2} | ({k} if dilation else set())
    return c_levels, lam_levels


def unhat(frame: CoefficientFrame, sched: PerturbationSchedule, t: Scalar = None) -> CoefficientFrame:
    """带帽帧 → 不带帽帧: c_{k+1} = ĉ_{k+1} + μ, λ_{k+1} = λ̂_{k+1}/ν"""
    t = frame.t if t is None else t
    mu, nu, _, _ = _like(frame, sched.at(t))
    c, lam = list(frame.c), list(frame.lam)
    j = sched.level
    if j < len(c):
        c[j] = c[j] + mu
    if j < len(lam):
        lam[j] = lam[j] / nu
    return frame.with_values(c, lam, t)
