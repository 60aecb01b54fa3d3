"""
R_I 递推系数序列

一个族由三条序列 (c_n, λ_n, a_n) 给出:
    P_{n+1}(z) = (z - c_n) P_n(z) - λ_n (z - a_n) P_{n-1}(z)

下标约定:
- c 从 0 开始；λ、a 从 1 开始
- λ_0、a_0 只与 P_{-1} = 0 相乘，固定为占位值 0

设计原则:
- 序列对象不可变，扰动通过 modified() 生成新对象
- 每条序列可以是闭式规则，也可以是有限显式列表（越界抛 SequenceIndexError）
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Dict, Optional, Sequence, Tuple

from src.core.errors import PoleError, SequenceIndexError, DomainError
from src.core.polynomial import Polynomial
from src.core.scalar import RATIONAL, Scalar, check_mode, to_scalar

Rule = Callable[[int], Scalar]


def _list_rule(values: Tuple, start: int, label: str) -> Rule:
    """有限列表 → 规则；values[0] 对应下标 start"""
    def rule(n: int) -> Scalar:
        j = n - start
        if j < 0 or j >= len(values):
            raise SequenceIndexError(
                f"{label}_{n} 超出显式序列范围 [{start}, {start + len(values) - 1}]")
        return values[j]
    return rule


@dataclass(frozen=True, eq=False)
class CoefficientSequences:
    """R_I 递推系数三元组"""
    name: str
    c_rule: Rule
    lambda_rule: Rule
    a_rule: Rule
    mode: str = RATIONAL
    positive_L: bool = False
    max_index: Optional[int] = None     # 显式序列可用的最大下标
    params: Tuple = ()                  # 描述用参数 (('a', 11), ('c', 12))
    overrides: Dict[Tuple[str, int], Scalar] = field(default_factory=dict)

    def __post_init__(self):
        check_mode(self.mode)

    # ---- 访问 ----------------------------------------------------------
    def _lookup(self, kind: str, n: int, rule: Rule) -> Scalar:
        if n < 0:
            raise SequenceIndexError(f"{kind}_{n}: 下标必须 >= 0")
        if (kind, n) in self.overrides:
            return to_scalar(self.overrides[(kind, n)], self.mode)
        return to_scalar(rule(n), self.mode)

    def c(self, n: int) -> Scalar:
        return self._lookup('c', n, self.c_rule)

    def lam(self, n: int) -> Scalar:
        if n == 0 and ('lambda', 0) not in self.overrides:
            return to_scalar(0, self.mode)
        return self._lookup('lambda', n, self.lambda_rule)

    def a(self, n: int) -> Scalar:
        if n == 0:
            return to_scalar(0, self.mode)
        return self._lookup('a', n, self.a_rule)

    def w(self, n: int) -> Polynomial:
        """z - a_n"""
        return Polynomial.linear(self.a(n))

    def lam_w(self, n: int) -> Polynomial:
        """λ_n (z - a_n)"""
        return self.w(n) * self.lam(n)

    # ---- 变换 ----------------------------------------------------------
    def modified(self, c: Dict[int, Scalar] = None, lam: Dict[int, Scalar] = None,
                 name: str = None, positive_L: bool = None) -> 'CoefficientSequences':
        """返回覆盖了若干系数的新序列对象（原对象不变）"""
        overrides = dict(self.overrides)
        for n, v in (c or {}).items():
            overrides[('c', n)] = v
        for n, v in (lam or {}).items():
            overrides[('lambda', n)] = v
        if positive_L is None:
            # a_n 不变，只需覆盖值本身仍为正
            positive_L = (self.positive_L
                          and all(v > 0 for v in (c or {}).values())
                          and all(v > 0 for n, v in (lam or {}).items() if n >= 1))
        return replace(self, overrides=overrides, name=name or self.name,
                       positive_L=positive_L)

    def with_mode(self, mode: str) -> 'CoefficientSequences':
        return replace(self, mode=check_mode(mode))

    def describe(self) -> str:
        args = ', '.join(f'{k}={v}' for k, v in self.params)
        extra = ''
        if self.overrides:
            extra = ' {' + ', '.join(f'{k}_{n}={v}' for (k, n), v in sorted(self.overrides.items())) + '}'
        return f"{self.name}({args}){extra}"

    def table(self, N: int) -> Dict[str, list]:
        """c_0..c_N, λ_1..λ_N, a_1..a_N"""
        return {
            'c': [self.c(n) for n in range(N + 1)],
            'lambda': [self.lam(n) for n in range(1, N + 1)],
            'a': [self.a(n) for n in range(1, N + 1)],
        }


def check_positive_L(seqs: CoefficientSequences, N: int) -> bool:
    """在 n <= N 范围内逐项核对 a_n = 0, c_n > 0, λ_n > 0"""
    try:
        for n in range(N + 1):
            if seqs.c(n) <= 0:
                return False
            if n >= 1 and (seqs.a(n) != 0 or seqs.lam(n) <= 0):
                return False
    except (SequenceIndexError, PoleError):
        return False
    return True


# ---- 内置族 ------------------------------------------------------------

def example1(mode: str = RATIONAL) -> CoefficientSequences:
    """c_n ≡ 1, λ_n ≡ 1/4, a_n ≡ -1（常系数族，闭式见 perturbation.representation）"""
    return CoefficientSequences(
        name='example1',
        c_rule=lambda n: Fraction(1),
        lambda_rule=lambda n: Fraction(1, 4),
        a_rule=lambda n: Fraction(-1),
        mode=mode,
    )


def positive1(mode: str = RATIONAL) -> CoefficientSequences:
    """c_n ≡ 1, λ_n ≡ 1/4, a_n ≡ 0（positive_L 同伴族）"""
    return CoefficientSequences(
        name='positive1',
        c_rule=lambda n: Fraction(1),
        lambda_rule=lambda n: Fraction(1, 4),
        a_rule=lambda n: Fraction(0),
        mode=mode,
        positive_L=True,
    )


def explicit(c: Sequence, lam: Sequence, a: Sequence = None,
             mode: str = RATIONAL, name: str = 'explicit') -> CoefficientSequences:
    """显式有限列表: c=[c_0..], lam=[λ_1..], a=[a_1..]（a 省略时全为 0）

    Args:
        c: c_0, c_1, ...
        lam: λ_1, λ_2, ...
        a: a_1, a_2, ...；None 表示与 lam 等长的零序列
    """
    c_vals = tuple(to_scalar(v, mode) for v in c)
    lam_vals = tuple(to_scalar(v, mode) for v in lam)
    if a is None:
        a = [0] * len(lam_vals)
    a_vals = tuple(to_scalar(v, mode) for v in a)
    if not c_vals:
        raise DomainError("显式序列至少需要 c_0")
    seqs = CoefficientSequences(
        name=name,
        c_rule=_list_rule(c_vals, 0, 'c'),
        lambda_rule=_list_rule(lam_vals, 1, 'lambda'),
        a_rule=_list_rule(a_vals, 1, 'a'),
        mode=mode,
        max_index=min(len(c_vals) - 1, len(lam_vals), len(a_vals)),
        params=(('c', list(c_vals)), ('lambda', list(lam_vals)), ('a', list(a_vals))),
    )
    positive = check_positive_L(seqs, seqs.max_index)
    return replace(seqs, positive_L=positive)


def hyper2(b: Scalar, c: Scalar, mode: str = RATIONAL) -> CoefficientSequences:
    """c_n = (b-c-n)/(b+n), λ_n = n(n+c-1)/((b+n-1)(b+n)), a_n = 0

    多项式为 ((c)_n/(b)_n)·F(-n, b; c; 1-z)。
    """
    b, c = Fraction(b), Fraction(c)

    def c_rule(n):
        if b + n == 0:
            raise PoleError(f"hyper2: b+{n} = 0")
        return (b - c - n) / (b + n)

    def lambda_rule(n):
        den = (b + n - 1) * (b + n)
        if den == 0:
            raise PoleError(f"hyper2: (b+n-1)(b+n) = 0 at n={n}")
        return n * (n + c - 1) / den

    return CoefficientSequences(
        name='hyper2', c_rule=c_rule, lambda_rule=lambda_rule,
        a_rule=lambda n: Fraction(0), mode=mode, params=(('b', b), ('c', c)),
    )


def eta_family_seqs(eta: Scalar, mode: str = RATIONAL) -> CoefficientSequences:
    """η 族的 R_I 视角: c_n ≡ -1, λ_n = 4 d_{n+1} = n(2η+n+1)/((η+n)(η+n+1))

    即 hyper2(b=η+1, c=2η+2)；t 只影响链序列视角的 d_1，不进入本族。
    """
    eta = Fraction(eta)
    if eta <= -1:
        raise DomainError(f"η 必须 > -1，收到 {eta}")
    seqs = hyper2(eta + 1, 2 * eta + 2, mode)
    return replace(seqs, name='eta', params=(('eta', eta),),
                   c_rule=lambda n: Fraction(-1))
