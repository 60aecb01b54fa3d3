"""
稠密单项式基多项式

系数按次数升序存储，末尾的零自动裁掉；零多项式的 degree 为 -1。
系数可以是 Fraction（精确）、float 或 complex，运算保持 Python 数值塔的
提升规则（Fraction 与 float 混算得到 float）。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Tuple

import numpy as np

from src.core.scalar import Scalar, all_exact


def _trim(coeffs: Sequence) -> Tuple:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """多项式 p(z) = Σ coeffs[j] z^j"""
    coeffs: Tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _trim(self.coeffs))

    # ---- 构造 ----------------------------------------------------------
    @classmethod
    def zero(cls) -> 'Polynomial':
        return cls(())

    @classmethod
    def one(cls) -> 'Polynomial':
        return cls((Fraction(1),))

    @classmethod
    def constant(cls, value: Scalar) -> 'Polynomial':
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coef: Scalar = Fraction(1)) -> 'Polynomial':
        return cls((Fraction(0),) * degree + (coef,))

    @classmethod
    def linear(cls, root: Scalar) -> 'Polynomial':
        """z - root"""
        return cls((-root, Fraction(1)))

    # ---- 基本属性 ------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def is_exact(self) -> bool:
        return all_exact(self.coeffs)

    def coefficient(self, j: int) -> Scalar:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    # ---- 代数运算 ------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coefficient(j) + other.coefficient(j) for j in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return Polynomial.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial(tuple(c * other for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, m: int):
        out = Polynomial.one()
        for _ in range(m):
            out = out * self
        return out

    def shift_degree(self, m: int) -> 'Polynomial':
        """乘以 z^m"""
        if self.is_zero:
            return self
        return Polynomial((Fraction(0),) * m + self.coeffs)

    def derivative(self) -> 'Polynomial':
        return Polynomial(tuple(j * c for j, c in enumerate(self.coeffs) if j > 0))

    def map(self, fn: Callable) -> 'Polynomial':
        return Polynomial(tuple(fn(c) for c in self.coeffs))

    def to_float(self) -> 'Polynomial':
        return self.map(lambda c: c if isinstance(c, complex) else float(c))

    def conj_reversed(self, n: int) -> 'Polynomial':
        """z^n · conj(p(1/conj z))：系数反转并取共轭"""
        padded = [self.coefficient(j) for j in range(n + 1)]
        return Polynomial(tuple(c.conjugate() for c in reversed(padded)))

    # ---- 求值 ----------------------------------------------------------
    def __call__(self, z: Scalar) -> Scalar:
        """Horner 求值；rational 模式下精确"""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def as_array(self) -> np.ndarray:
        """升序浮点系数数组（供 numpy / scipy 使用）"""
        dtype = complex if any(isinstance(c, complex) for c in self.coeffs) else float
        return np.array([complex(c) if dtype is complex else float(c) for c in self.coeffs], dtype=dtype)

    def norm1(self) -> float:
        return float(sum(abs(c) for c in self.coeffs))

    # ---- 比较 ----------------------------------------------------------
    def equals(self, other: 'Polynomial', tol: float = None) -> bool:
        """tol=None 时逐系数精确比较；否则逐系数 |Δ| <= tol·(1+max|coeff|)"""
        if tol is None:
            return self.coeffs == other.coeffs
        n = max(len(self.coeffs), len(other.coeffs))
        scale = 1.0 + max([abs(c) for c in self.coeffs + other.coeffs] or [0.0])
        return all(abs(self.coefficient(j) - other.coefficient(j)) <= tol * scale
                   for j in range(n))

    def __str__(self) -> str:
        if self.is_zero:
            return '0'
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            mono = '' if j == 0 else ('z' if j == 1 else f'z^{j}')
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f'-{mono}')
            else:
                terms.append(f'{c}*{mono}' if mono else f'{c}')
        return ' + '.join(terms).replace('+ -', '- ')


def poly_matrix_product(left, right):
    """2×2 多项式矩阵乘法，矩阵用 ((a, b), (c, d)) 元组表示"""
    (a, b), (c, d) = left
    (e, f), (g, h) = right
    return ((a * e + b * g, a * f + b * h),
            (c * e + d * g, c * f + d * h))
