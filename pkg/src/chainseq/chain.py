"""
正链序列（positive chain sequence）

{d_n}_{n>=1} 是正链序列，当且仅当存在参数序列 {g_n}_{n>=0} 使
    0 <= g_0 < 1,  0 < g_n < 1 (n >= 1),  d_{n+1} = (1 - g_n) g_{n+1}

- 最小参数 m_n: m_0 = 0，前向递推 m_{n+1} = d_{n+1}/(1 - m_n)，精确计算
- 最大参数 M_n: 有限深度后向递推 g_n = 1 - d_{n+1}/g_{n+1}，浮点计算
- SPPCS: 最小参数与最大参数一致；后向递推不收敛时改用 Wall 级数
  Σ ∏ m_j/(1-m_j) 的发散性（Raabe 指标 <= 1 即发散）
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.core.errors import (
    BreakdownError,
    DomainError,
    NotAChainSequenceError,
    SequenceIndexError,
)
from src.core.scalar import RATIONAL, Scalar, check_mode, to_scalar

Rule = Callable[[int], Scalar]

TAIL_DEPTH = 1000
DEPTH_TOL = 1e-8
MAX_DEPTH = 64000
SPPCS_TOL = 1e-6
RAABE_DEPTH = 100000
RAABE_TOL = 1e-3
G0_TOL = 1e-12          # g_0 允许的负向舍入


@dataclass(frozen=True, eq=False)
class ChainSequence:
    """d_1, d_2, ...；最小参数按需扩展并缓存"""
    name: str
    rule: Rule
    mode: str = RATIONAL
    max_index: Optional[int] = None
    params: Tuple = ()
    _minimal: List = field(default_factory=list, repr=False)

    def __post_init__(self):
        check_mode(self.mode)

    def d(self, n: int) -> Scalar:
        if n < 1:
            raise SequenceIndexError(f"d_{n}: 下标必须 >= 1")
        if self.max_index is not None and n > self.max_index:
            raise SequenceIndexError(f"d_{n} 超出显式序列范围 [1, {self.max_index}]")
        return to_scalar(self.rule(n), self.mode)

    def head(self, N: int) -> List[Scalar]:
        """[d_1, ..., d_N]"""
        return [self.d(n) for n in range(1, N + 1)]

    def minimal(self, N: int) -> List[Scalar]:
        """[m_0, ..., m_N]，已算过的部分直接复用"""
        cache = self._minimal
        if not cache:
            cache.append(to_scalar(0, self.mode))
        while len(cache) <= N:
            n = len(cache) - 1
            m = self.d(n + 1) / (1 - cache[n])
            if not 0 < m < 1:
                raise NotAChainSequenceError(
                    f"{self.name}: m_{n + 1} = {m} 不在 (0,1) 内，不是正链序列")
            cache.append(m)
        return list(cache[:N + 1])

    def with_mode(self, mode: str) -> 'ChainSequence':
        return replace(self, mode=check_mode(mode), _minimal=[])

    def describe(self) -> str:
        args = ', '.join(f'{k}={v}' for k, v in self.params)
        return f"{self.name}({args})"


def from_list(values: Sequence, extend: bool = True, mode: str = RATIONAL,
              name: str = 'explicit') -> ChainSequence:
    """[d_1, ..., d_K]；extend 为 True 时 d_n = d_K (n > K)"""
    vals = tuple(to_scalar(v, mode) for v in values)
    if not vals:
        raise DomainError("链序列至少需要 d_1")

    def rule(n: int) -> Scalar:
        if n <= len(vals):
            return vals[n - 1]
        if extend:
            return vals[-1]
        raise SequenceIndexError(f"d_{n} 超出显式序列范围 [1, {len(vals)}]")

    return ChainSequence(name, rule, mode, None if extend else len(vals),
                         params=(('d', list(vals)), ('extend', extend)))


def constant(value: Scalar, mode: str = RATIONAL) -> ChainSequence:
    value = to_scalar(value, mode)
    return ChainSequence('constant', lambda n: value, mode, params=(('d', value),))


def as_chain(d) -> ChainSequence:
    if isinstance(d, ChainSequence):
        return d
    if callable(d):
        return ChainSequence('rule', d)
    return from_list(d)


# ---- 参数序列 --------------------------------------------------------------

def minimal_parameters(d, N: int) -> List[Scalar]:
    """[m_0=0, m_1, ..., m_N]"""
    return as_chain(d).minimal(N)


def _tail_start(d_tail: float) -> float:
    # g = 1 - d/g 的较大不动点
    return (1.0 + float(np.sqrt(max(0.0, 1.0 - 4.0 * d_tail)))) / 2.0


def backward_parameters(d, N: int, depth: int) -> List[float]:
    """从深度 depth 处的冻结尾部不动点出发后向递推，返回 [g_0, ..., g_N]"""
    chain = as_chain(d)
    if depth < N:
        raise DomainError(f"tail_depth={depth} 必须 >= N={N}")
    g = _tail_start(float(chain.d(depth + 1)))
    values = np.empty(N + 1)
    if depth <= N:
        values[depth] = g
    for n in range(depth - 1, -1, -1):
        g = 1.0 - float(chain.d(n + 1)) / g
        if n >= 1 and g <= 0:
            raise BreakdownError(f"{chain.name}: 后向递推在 n={n} 处 g={g} <= 0（深度 {depth}）")
        if n == 0:
            if g < -G0_TOL:
                raise BreakdownError(f"{chain.name}: g_0 = {g} < 0（深度 {depth}）")
            g = max(g, 0.0)
        if n <= N:
            values[n] = g
    return values.tolist()


@dataclass
class MaximalParameters:
    values: List[float]
    depth: int
    converged: bool


def adaptive_maximal(d, N: int, tail_depth: int = TAIL_DEPTH, depth_tol: float = DEPTH_TOL,
                     max_depth: int = MAX_DEPTH) -> MaximalParameters:
    """深度从 tail_depth 起倍增，直到相邻两次的 g_0 相差 < depth_tol"""
    chain = as_chain(d)
    depth = max(tail_depth, N)
    if chain.max_index is not None:
        max_depth = min(max_depth, chain.max_index - 1)
        depth = min(depth, max_depth)
    prev = backward_parameters(chain, N, depth)
    while 2 * depth <= max_depth:
        depth *= 2
        cur = backward_parameters(chain, N, depth)
        if abs(cur[0] - prev[0]) < depth_tol:
            return MaximalParameters(cur, depth, True)
        prev = cur
    return MaximalParameters(prev, depth, False)


def maximal_parameters(d, N: int, tail_depth: int = None, depth_tol: float = DEPTH_TOL,
                       max_depth: int = MAX_DEPTH) -> List[float]:
    """[M_0, ..., M_N] 的近似；给定 tail_depth 时只做一次后向递推"""
    if tail_depth is not None:
        return backward_parameters(d, N, tail_depth)
    return adaptive_maximal(d, N, depth_tol=depth_tol, max_depth=max_depth).values


# ---- SPPCS ----------------------------------------------------------------

def raabe_index(d, depth: int = RAABE_DEPTH) -> float:
    """Wall 级数 Σ_n ∏_{j<=n} m_j/(1-m_j) 在 n = depth 处的 Raabe 指标

    n (T_n/T_{n+1} - 1) = n ((1 - m_{n+1})/m_{n+1} - 1)
    最小参数以浮点前向递推计算。
    """
    chain = as_chain(d)
    m = 0.0
    for n in range(1, depth + 2):
        m = float(chain.d(n)) / (1.0 - m)
        if not 0.0 < m < 1.0:
            raise NotAChainSequenceError(f"{chain.name}: m_{n} = {m} 不在 (0,1) 内")
    return depth * ((1.0 - m) / m - 1.0)


@dataclass
class SppcsVerdict:
    sppcs: bool
    method: str                 # 'backward' | 'wall'
    max_gap: float
    depth: int
    maximal: List[float] = field(default_factory=list)
    raabe: Optional[float] = None

    def to_json(self) -> dict:
        return {'sppcs': self.sppcs, 'method': self.method, 'max_gap': self.max_gap,
                'depth': self.depth, 'raabe': self.raabe}


def sppcs_verdict(d, N: int, tail_depth: int = TAIL_DEPTH, depth_tol: float = DEPTH_TOL,
                  max_depth: int = MAX_DEPTH, sppcs_tol: float = SPPCS_TOL,
                  raabe_depth: int = RAABE_DEPTH, raabe_tol: float = RAABE_TOL) -> SppcsVerdict:
    """max_n |M_n - m_n| < sppcs_tol 判定；后向递推未收敛时用 Wall 级数判定"""
    chain = as_chain(d)
    m = [float(v) for v in chain.minimal(N)]
    M = adaptive_maximal(chain, N, tail_depth, depth_tol, max_depth)
    gap = max(abs(a - b) for a, b in zip(M.values, m))
    if M.converged:
        return SppcsVerdict(gap < sppcs_tol, 'backward', gap, M.depth, M.values)
    p = raabe_index(chain, raabe_depth)
    return SppcsVerdict(p <= 1.0 + raabe_tol, 'wall', gap, M.depth, M.values, p)


def is_sppcs(d, N: int = 20, **kwargs) -> bool:
    return sppcs_verdict(d, N, **kwargs).sppcs


# ---- 补链与扰动 -------------------------------------------------------------

def complementary(d, N: int = 10) -> ChainSequence:
    """k_0 = 0, k_n = 1 - m_n 给出的链序列 a_{n+1} = (1 - k_n) k_{n+1}

    即 a_1 = 1 - m_1, a_{n+1} = m_n (1 - m_{n+1})；前 N 个最小参数预先检查。
    """
    chain = as_chain(d)
    chain.minimal(N)

    def rule(n: int) -> Scalar:
        m = chain.minimal(n)
        return m[n - 1] * (1 - m[n]) if n >= 2 else 1 - m[1]

    return ChainSequence(f'complementary[{chain.name}]', rule, chain.mode, chain.max_index,
                         params=chain.params)


def codilated(d, level: int, nu: Scalar) -> ChainSequence:
    """d̂_level = ν d_level，其余不变"""
    chain = as_chain(d)
    if level < 1:
        raise DomainError(f"level={level} 必须 >= 1")
    nu = to_scalar(nu, chain.mode)
    if nu <= 0:
        raise DomainError(f"ν 必须 > 0，收到 {nu}")

    def rule(n: int) -> Scalar:
        value = chain.d(n)
        return nu * value if n == level else value

    return ChainSequence(f'codilated[{chain.name}]', rule, chain.mode, chain.max_index,
                         params=chain.params + (('level', level), ('nu', nu)))


# ---- η 族 ---------------------------------------------------------------

def eta_d(eta: Scalar, n: int) -> Fraction:
    """d_{n+1} = n(2η+n+1)/(4(η+n)(η+n+1))，n >= 1"""
    eta = Fraction(eta)
    return n * (2 * eta + n + 1) / (4 * (eta + n) * (eta + n + 1))


def eta_minimal(eta: Scalar, n: int) -> Fraction:
    """尾链 {d_{n+1}} 的最小参数 n/(2(η+n+1))"""
    return Fraction(n) / (2 * (Fraction(eta) + n + 1))


def eta_maximal(eta: Scalar, n: int) -> Fraction:
    """M_n = (2η+n)/(2(η+n))"""
    eta = Fraction(eta)
    return (2 * eta + n) / (2 * (eta + n))


def complementary_closed_form(eta: Scalar, n: int) -> Fraction:
    """t = 0 的增广链的补链: a_1 = 1/(2η+2), a_{n+1} = (n+1)(2η+n)/(4(η+n)(η+n+1))"""
    eta = Fraction(eta)
    if n == 1:
        return 1 / (2 * eta + 2)
    j = n - 1
    return (j + 1) * (2 * eta + j) / (4 * (eta + j) * (eta + j + 1))


@dataclass(frozen=True)
class EtaFamilyInfo:
    eta: Fraction
    t: Fraction
    augmented: bool             # False: η <= -1/2，返回尾链 {d_{n+1}}_{n>=1}
    sppcs_expected: bool

    def minimal(self, n: int) -> Fraction:
        return eta_minimal(self.eta, n)

    def maximal(self, n: int) -> Fraction:
        return eta_maximal(self.eta, n)

    def to_json(self) -> dict:
        return {
            'eta': str(self.eta), 't': str(self.t), 'augmented': self.augmented,
            'sppcs_expected': self.sppcs_expected,
            'm_n': 'n/(2(eta+n+1))', 'M_n': '(2eta+n)/(2(eta+n))',
        }


def eta_family(eta: Scalar, t: Scalar = 0) -> Tuple[ChainSequence, EtaFamilyInfo]:
    """η > -1/2: 增广链 d_1 = (1-t)M_1, d_{n+1} = eta_d(η, n)，最大参数 (t, M_1, M_2, ...)
    -1 < η <= -1/2: 尾链 e_n = d_{n+1}，此时为 SPPCS（t 不参与）
    """
    eta, t = Fraction(eta), Fraction(t)
    if eta <= -1:
        raise DomainError(f"η 必须 > -1，收到 {eta}")
    if not 0 <= t < 1:
        raise DomainError(f"t 必须在 [0, 1) 内，收到 {t}")
    params = (('eta', eta), ('t', t))
    if eta <= Fraction(-1, 2):
        chain = ChainSequence('eta-tail', lambda n: eta_d(eta, n), params=params)
        return chain, EtaFamilyInfo(eta, t, False, True)
    head = (1 - t) * eta_maximal(eta, 1)

    def rule(n: int) -> Fraction:
        return head if n == 1 else eta_d(eta, n - 1)

    return ChainSequence('eta', rule, params=params), EtaFamilyInfo(eta, t, True, t == 0)


def parameter_table(d, N: int, **kwargs) -> Dict[str, list]:
    """d、m、M 与 SPPCS 判定，供 CLI 输出"""
    chain = as_chain(d)
    verdict = sppcs_verdict(chain, N, **kwargs)
    return {
        'd': chain.head(N),
        'minimal': chain.minimal(N),
        'maximal': verdict.maximal,
        'sppcs': verdict.to_json(),
    }
