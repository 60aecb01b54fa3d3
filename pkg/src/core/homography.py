"""
多项式系数的分式线性变换 u ↦ (A u + B)/(C u + D)

设计原则:
- 与 2×2 多项式矩阵一一对应，复合即矩阵乘法
- 等价 (≐) 按交叉乘积判断: 两组系数成比例 ⇔ 所有 2×2 子式为零
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Tuple

from src.core.errors import DegenerateHomographyError, PoleError
from src.core.polynomial import Polynomial, poly_matrix_product
from src.core.scalar import Scalar


@dataclass(frozen=True)
class Homography:
    A: Polynomial
    B: Polynomial
    C: Polynomial
    D: Polynomial

    @classmethod
    def identity(cls) -> 'Homography':
        one, zero = Polynomial.one(), Polynomial.zero()
        return cls(one, zero, zero, one)

    @classmethod
    def from_matrix(cls, m) -> 'Homography':
        (a, b), (c, d) = m
        return cls(a, b, c, d)

    @property
    def matrix(self):
        return ((self.A, self.B), (self.C, self.D))

    @property
    def entries(self) -> Tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
        return self.A, self.B, self.C, self.D

    def det(self) -> Polynomial:
        return self.A * self.D - self.B * self.C

    def require_nondegenerate(self) -> 'Homography':
        if self.det().is_zero:
            raise DegenerateHomographyError("AD - BC ≡ 0")
        return self

    def apply(self, u: Scalar, z: Scalar) -> Scalar:
        """在点 z 处作用于值 u"""
        den = self.C(z) * u + self.D(z)
        if den == 0:
            raise PoleError(f"C(z)u + D(z) = 0 at z={z}")
        return (self.A(z) * u + self.B(z)) / den

    def __matmul__(self, other: 'Homography') -> 'Homography':
        """self ∘ other"""
        return Homography.from_matrix(poly_matrix_product(self.matrix, other.matrix))

    def compose(self, other: 'Homography') -> 'Homography':
        return self @ other

    def scaled(self, factor) -> 'Homography':
        return Homography(self.A * factor, self.B * factor, self.C * factor, self.D * factor)

    def cofactor(self) -> 'Homography':
        """[[m22, -m21], [-m12, m11]]"""
        return Homography(self.D, -self.C, -self.B, self.A)

    def cross_minors(self, other: 'Homography') -> Dict[str, Polynomial]:
        """e_i f_j - e_j f_i 对全部 6 个下标对"""
        names = 'ABCD'
        e, f = self.entries, other.entries
        return {f'{names[i]}{names[j]}': e[i] * f[j] - e[j] * f[i]
                for i, j in combinations(range(4), 2)}

    def equivalent(self, other: 'Homography', tol: float = None) -> bool:
        """两变换相差一个非零多项式因子"""
        for minor in self.cross_minors(other).values():
            if tol is None:
                if not minor.is_zero:
                    return False
            elif not minor.equals(Polynomial.zero(), tol):
                return False
        return True
