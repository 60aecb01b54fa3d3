"""
递推核心测试

族生成、第二类多项式、转移矩阵、Casoratti 恒等式与超几何表示
"""

import sys
import argparse
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.errors import DomainError, PoleError, SequenceIndexError, ZeroLambdaError
from src.core.homography import Homography
from src.core.polynomial import Polynomial
from src.core.recurrence import (
    casoratti_identity_residual,
    cumulative_transfer,
    generate_family,
    generate_second_kind,
    transfer_step,
)
from src.core.scalar import FLOAT, to_scalar
from src.core.sequences import (
    check_positive_L,
    eta_family_seqs,
    example1,
    explicit,
    hyper2,
    positive1,
)
from src.zeros.ljacobi import hyper2_oracle, hypergeometric_oracle, ljacobi_seqs

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)
positive_rationals = st.fractions(min_value=Fraction(1, 12), max_value=5, max_denominator=12)


def z():
    return Polynomial.monomial(1)


def test_example1_low_degrees():
    P = generate_family(example1(), 2)
    assert P[0] == Polynomial.one()
    assert P[1] == z() - 1
    # (z-1)² - (1/4)(z+1)
    assert P[2] == Polynomial((Fraction(3, 4), Fraction(-9, 4), Fraction(1)))


def test_second_kind_initial_values():
    Q = generate_second_kind(example1(), 3)
    assert Q[0].is_zero
    assert Q[1] == Polynomial.one()
    assert Q[2] == z() - 1
    assert [q.degree for q in Q] == [-1, 0, 1, 2]


def test_families_are_monic():
    for seqs in (example1(), positive1(), ljacobi_seqs(11, 12), hyper2(Fraction(1, 2), 3)):
        for n, p in enumerate(generate_family(seqs, 9)):
            assert p.degree == n and p.is_monic


def test_cumulative_transfer_generates_family():
    seqs = ljacobi_seqs(-12, -10)
    P = generate_family(seqs, 7)
    for n in range(6):
        top, bottom = cumulative_transfer(seqs, n).apply((Polynomial.one(), Polynomial.zero()))
        assert top == P[n + 1]
        assert bottom == P[n]


def test_transfer_step_determinant():
    seqs = example1()
    for n in range(1, 6):
        assert transfer_step(seqs, n).det() == seqs.lam_w(n)


def test_casoratti_identity_on_positive_families():
    for seqs in (positive1(), ljacobi_seqs(11, 12)):
        assert seqs.positive_L
        for k in range(1, 5):
            for n in range(k, 10):
                assert casoratti_identity_residual(seqs, k, n).is_zero


def test_casoratti_identity_domain():
    with pytest.raises(DomainError):
        casoratti_identity_residual(positive1(), 0, 3)


def test_ljacobi_hypergeometric_representation():
    seqs = ljacobi_seqs(11, 12)
    P = generate_family(seqs, 8)
    points = [Fraction(0), Fraction(1, 3), Fraction(2), Fraction(-5, 7), Fraction(9, 2)]
    for n in range(9):
        for x in points:
            assert P[n](x) == hypergeometric_oracle(Fraction(11), Fraction(12), n, x)


def test_hyper2_hypergeometric_representation():
    b, c = Fraction(1, 2), Fraction(3)
    P = generate_family(hyper2(b, c), 8)
    for n in range(9):
        for x in (Fraction(2), Fraction(-1, 4), Fraction(7, 3)):
            assert P[n](x) == hyper2_oracle(b, c, n, x)


def test_eta_family_is_hyper2():
    eta = Fraction(1)
    seqs = eta_family_seqs(eta)
    ref = hyper2(eta + 1, 2 * eta + 2)
    for n in range(8):
        assert seqs.c(n) == -1 == ref.c(n)
        if n >= 1:
            assert seqs.lam(n) == ref.lam(n)


def test_modified_keeps_positive_L():
    seqs = positive1()
    assert seqs.modified(c={3: Fraction(3, 2)}).positive_L
    assert seqs.modified(lam={2: Fraction(1, 2)}).positive_L
    assert not seqs.modified(c={3: Fraction(-1, 2)}).positive_L
    assert not seqs.modified(lam={2: Fraction(-1)}).positive_L
    assert not example1().modified(c={3: Fraction(2)}).positive_L
    assert not seqs.modified(c={3: Fraction(2)}, positive_L=False).positive_L
    # 表 T2 的 c_0 覆盖
    assert ljacobi_seqs(-12, -10, N=9).modified(c={0: Fraction(5, 7)}).positive_L


def test_explicit_sequences_bounds():
    seqs = explicit([1, 2, 3], [Fraction(1, 4), Fraction(1, 2)])
    assert seqs.max_index == 2
    assert seqs.positive_L
    generate_family(seqs, 3)
    with pytest.raises(SequenceIndexError):
        generate_family(seqs, 4)


def test_zero_lambda_raises():
    seqs = explicit([1, 1, 1], [Fraction(1, 4), 0])
    with pytest.raises(ZeroLambdaError):
        generate_family(seqs, 3)


def test_ljacobi_pole():
    with pytest.raises(PoleError):
        generate_family(ljacobi_seqs(3, 12), 5)


def test_check_positive_L():
    assert check_positive_L(positive1(), 10)
    assert not check_positive_L(example1(), 10)
    # c_10 = 0
    assert check_positive_L(ljacobi_seqs(-12, -10), 9)
    assert not check_positive_L(ljacobi_seqs(-12, -10), 10)


def test_float_mode_matches_rational():
    exact = generate_family(ljacobi_seqs(11, 12), 6)
    approx = generate_family(ljacobi_seqs(11, 12).with_mode(FLOAT), 6)
    for a, b in zip(exact, approx):
        assert b.equals(a.to_float(), 1e-12)


def test_float_to_rational_uses_decimal_repr():
    assert to_scalar(0.3) == Fraction(3, 10)


def test_homography_composition_matches_application():
    H1 = Homography(z(), Polynomial.constant(Fraction(1)), Polynomial.one(), z() + 2)
    H2 = Homography(Polynomial.constant(Fraction(2)), z(), Polynomial.one(), Polynomial.constant(Fraction(3)))
    u, x = Fraction(5, 7), Fraction(3, 2)
    assert (H1 @ H2).apply(u, x) == H1.apply(H2.apply(u, x), x)
    assert (H1 @ H2).det() == H1.det() * H2.det()
    assert H1.equivalent(H1.scaled(z() + 1))


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=7, max_size=7),
       st.lists(rationals.filter(lambda v: v != 0), min_size=6, max_size=6),
       st.lists(rationals, min_size=6, max_size=6))
def test_random_explicit_family_recurrence(c, lam, a):
    seqs = explicit(c, lam, a)
    P = generate_family(seqs, 6)
    for n in range(1, 6):
        rhs = Polynomial.linear(seqs.c(n)) * P[n] - seqs.lam_w(n) * P[n - 1]
        assert P[n + 1] == rhs
        assert P[n].degree == n


@settings(max_examples=30, deadline=None)
@given(st.lists(positive_rationals, min_size=6, max_size=6),
       st.lists(positive_rationals, min_size=5, max_size=5),
       st.integers(min_value=1, max_value=3))
def test_random_casoratti_identity(c, lam, k):
    seqs = explicit(c, lam)
    assert seqs.positive_L
    for n in range(k, 5):
        assert casoratti_identity_residual(seqs, k, n).is_zero


if __name__ == '__main__':
    ap = argparse.ArgumentParser()
    ap.add_argument('-k', default='', help='只运行名称包含该字符串的测试')
    args = ap.parse_args()
    sys.exit(pytest.main([__file__, '-q'] + (['-k', args.k] if args.k else [])))
