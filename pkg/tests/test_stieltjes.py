"""
Stieltjes 函数测试

R_I-fraction 渐近分式、尾部分式与扰动前后的分式线性变换
"""

import sys
import argparse
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.errors import DomainError, FractionPoleError
from src.core.recurrence import generate_family, generate_second_kind
from src.core.sequences import example1, hyper2, positive1
from src.perturbation.perturbation import Perturbation, apply_perturbation
from src.stieltjes.fraction import (
    convergent,
    first_vanishing_denominator,
    large_z_trend,
    ri_fraction,
    screen_point,
    tail_fraction,
    wallis,
)
from src.stieltjes.homography import (
    CORRECTION_SIGN,
    calibrate_full_sign,
    cofactor_consistent,
    composition_consistent,
    full_law_residual,
    homography_from_full,
    homography_from_tail,
    tail_from_full_residual,
    tail_law_residual,
)
from src.zeros.ljacobi import ljacobi_seqs

FAMILIES = [example1(), positive1(), ljacobi_seqs(11, 12), hyper2(Fraction(1, 2), 3)]
DEPTHS = (0, 1, 2, 3)


def kinds(k):
    perts = [Perturbation(k, Fraction(1, 2))]
    if k >= 1:
        perts += [Perturbation(k, Fraction(0), Fraction(3)),
                  Perturbation(k, Fraction(-1, 3), Fraction(1, 2))]
    return perts


def safe_point(seqs, pert, start=Fraction(7)):
    k = pert.k
    fractions = [(ri_fraction(seqs), k + 1 + m) for m in DEPTHS]
    fractions += [(ri_fraction(apply_perturbation(seqs, pert)), k + 1 + m) for m in DEPTHS]
    fractions += [(tail_fraction(seqs, k), m) for m in DEPTHS]
    return screen_point(fractions, start)


def test_wallis_polynomials_are_P_and_Q():
    for seqs in FAMILIES:
        P = generate_family(seqs, 6)
        Q = generate_second_kind(seqs, 6)
        for n, (A, B) in enumerate(wallis(ri_fraction(seqs), 6)):
            assert A == Q[n]
            assert B == P[n]


def test_convergent_equals_Q_over_P():
    seqs = example1()
    P = generate_family(seqs, 5)
    Q = generate_second_kind(seqs, 5)
    z = Fraction(7)
    for n in range(1, 6):
        assert convergent(ri_fraction(seqs), z, n) == Q[n](z) / P[n](z)
    assert convergent(ri_fraction(seqs), z, 0) == 0


def test_pole_detection_and_screening():
    cf = ri_fraction(example1())
    # P_1 = z - 1
    assert first_vanishing_denominator(cf, Fraction(1), 3) == 1
    with pytest.raises(FractionPoleError):
        convergent(cf, Fraction(1), 1)
    assert screen_point([(cf, 1)], Fraction(1)) == 2
    with pytest.raises(FractionPoleError):
        screen_point([(cf, 1)], Fraction(1), retries=0)


def test_large_z_trend_tends_to_one():
    trend = large_z_trend(ri_fraction(positive1()), 6)
    assert trend[-1] == pytest.approx(1.0, abs=1e-4)
    assert abs(trend[-1] - 1) < abs(trend[0] - 1)


def test_tail_law():
    for seqs in FAMILIES:
        for k in range(0, 4):
            for pert in kinds(k):
                z = safe_point(seqs, pert)
                for m in DEPTHS:
                    assert tail_law_residual(seqs, pert, z, m) == 0, (seqs.describe(), pert, m)


def test_full_law():
    for seqs in FAMILIES:
        for k in range(0, 4):
            for pert in kinds(k):
                z = safe_point(seqs, pert)
                for m in DEPTHS:
                    assert full_law_residual(seqs, pert, z, k + 1 + m) == 0, (seqs.describe(), pert, m)


def test_full_law_requires_depth():
    with pytest.raises(DomainError):
        full_law_residual(example1(), Perturbation(3, Fraction(1)), Fraction(7), 3)


def test_tail_from_full():
    for seqs in FAMILIES:
        for k in range(0, 4):
            z = safe_point(seqs, Perturbation(k, Fraction(1, 2)))
            for m in DEPTHS:
                assert tail_from_full_residual(seqs, k, z, m) == 0


def test_correction_sign_is_calibrated():
    for pert in kinds(2):
        assert calibrate_full_sign(ljacobi_seqs(11, 12), pert) == CORRECTION_SIGN


def test_composition_and_cofactor_agree():
    for seqs in FAMILIES:
        for k in range(1, 4):
            for pert in kinds(k):
                assert composition_consistent(seqs, pert)
                assert cofactor_consistent(seqs, pert)


def test_corecursive_at_level_zero():
    # k = 0: f̃ = f/(1 - μ f)
    seqs = positive1()
    H = homography_from_full(seqs, Perturbation(0, Fraction(2)))
    u, z = Fraction(1, 5), Fraction(9)
    assert H.apply(u, z) == u / (1 - 2 * u)
    assert homography_from_tail(seqs, Perturbation(0, Fraction(2))).det() != 0


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=3),
       st.fractions(min_value=-2, max_value=2, max_denominator=6),
       st.fractions(min_value=Fraction(1, 6), max_value=3, max_denominator=6))
def test_random_full_law(k, mu, nu):
    seqs = ljacobi_seqs(-12, -10)
    pert = Perturbation(k, mu, nu)
    z = safe_point(seqs, pert, Fraction(11, 3))
    assert full_law_residual(seqs, pert, z, k + 3) == 0


if __name__ == '__main__':
    ap = argparse.ArgumentParser()
    ap.add_argument('-k', default='', help='只运行名称包含该字符串的测试')
    args = ap.parse_args()
    sys.exit(pytest.main([__file__, '-q'] + (['-k', args.k] if args.k else [])))
