"""
Szegő 多项式（单位圆上的首一正交多项式）

两条构造路径:
- 由链序列: r_0 = 1, r_1 = (1+iβ_1)z + (1-iβ_1),
      r_{n+1} = ((1+iβ_{n+1})z + (1-iβ_{n+1})) r_n - 4d_{n+1} z r_{n-1}
      φ_n ∏_{j<=n}(1+iβ_j) = r_n - 2(1-m_n) r_{n-1}
- 由 δ 序列: φ*_n = conj(δ_n) z φ_{n-1} + φ*_{n-1},
             φ_n  = δ_n φ*_n + (1-|δ_n|²) z φ_{n-1}

β 取实常数或实数序列；β ≡ 0 时全程为精确有理系数。
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple, Union

from src.core.errors import DomainError
from src.core.polynomial import Polynomial
from src.core.scalar import Scalar, is_zero
from src.chainseq.chain import as_chain
from src.chainseq.verblunsky import as_verblunsky, modulus_sq

Beta = Union[Scalar, Callable[[int], Scalar]]


def _beta(beta: Beta, n: int) -> Scalar:
    return beta(n) if callable(beta) else beta


def _linear_factor(b: Scalar) -> Tuple[Scalar, Scalar]:
    """((1+iβ), (1-iβ))；β = 0 时保持精确整数"""
    if b == 0:
        return 1, 1
    return complex(1, float(b)), complex(1, -float(b))


def _line(b: Scalar) -> Polynomial:
    lead, const = _linear_factor(b)
    return Polynomial((const, lead))


def r_polynomials(beta: Beta, d, N: int) -> List[Polynomial]:
    """[r_0, ..., r_N]"""
    chain = as_chain(d)
    r = [Polynomial.one()]
    if N >= 1:
        r.append(_line(_beta(beta, 1)))
    for n in range(1, N):
        nxt = _line(_beta(beta, n + 1)) * r[n] - (r[n - 1] * (4 * chain.d(n + 1))).shift_degree(1)
        r.append(nxt)
    return r


@dataclass
class SzegoFamily:
    phi: List[Polynomial]
    verblunsky: List[Scalar]            # α_{n-1} = -conj(φ_n(0))，n = 1..N
    phi_star: Optional[List[Polynomial]] = None

    def to_json(self) -> dict:
        out = {
            'phi': [[str(c) for c in p.coeffs] for p in self.phi],
            'verblunsky': [str(a) for a in self.verblunsky],
        }
        if self.phi_star is not None:
            out['phi_star'] = [[str(c) for c in p.coeffs] for p in self.phi_star]
        return out


def verblunsky_from_phi(phi: List[Polynomial]) -> List[Scalar]:
    return [-(p(0).conjugate()) for p in phi[1:]]


def szego_from_chain(beta: Beta, d, N: int) -> SzegoFamily:
    """φ_0..φ_N 及 α_0..α_{N-1}"""
    chain = as_chain(d)
    r = r_polynomials(beta, chain, N)
    m = chain.minimal(N)
    phi = [Polynomial.one()]
    scale = 1
    for n in range(1, N + 1):
        scale = scale * _linear_factor(_beta(beta, n))[0]
        numer = r[n] - r[n - 1] * (2 * (1 - m[n]))
        phi.append(numer * (1 / scale) if scale != 1 else numer)
    return SzegoFamily(phi, verblunsky_from_phi(phi))


def szego_from_delta(delta, N: int) -> SzegoFamily:
    """φ_0..φ_N 与 φ*_0..φ*_N；|δ_n| >= 1 时由 VerblunskySeq 抛 ModulusViolationError"""
    seq = as_verblunsky(delta)
    phi, star = [Polynomial.one()], [Polynomial.one()]
    for n in range(1, N + 1):
        dn = seq.at(n)
        z_prev = phi[n - 1].shift_degree(1)
        star.append(z_prev * dn.conjugate() + star[n - 1])
        phi.append(star[n] * dn + z_prev * (1 - modulus_sq(dn)))
    return SzegoFamily(phi, verblunsky_from_phi(phi), star)


def reversal_holds(family: SzegoFamily, tol: float = None) -> bool:
    """φ*_n 等于 φ_n 的共轭反转"""
    if family.phi_star is None:
        raise DomainError("该族没有 φ*（仅 szego_from_delta 生成）")
    return all(family.phi_star[n].equals(p.conj_reversed(n), tol)
               for n, p in enumerate(family.phi))


# ---- 回文多项式 -------------------------------------------------------------

def palindromic_omega(p: Polynomial, tol: float = None) -> Optional[Scalar]:
    """p = z^n + ω(z^{n-1} + ... + z) + 1 时返回 ω，否则 None"""
    n = p.degree
    if n < 2:
        return None
    if not (is_zero(p.coefficient(n) - 1, tol) and is_zero(p.coefficient(0) - 1, tol)):
        return None
    omega = p.coefficient(1)
    if all(is_zero(p.coefficient(j) - omega, tol) for j in range(2, n)):
        return omega
    return None


def palindromic_omegas(polys: List[Polynomial], tol: float = None) -> List[Optional[Scalar]]:
    return [palindromic_omega(p, tol) for p in polys]
