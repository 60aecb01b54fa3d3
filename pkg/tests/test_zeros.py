"""
零点测试

实零点求解、交错分类、零点引理、公共零点、符号见证与零点表复现
"""

import sys
import argparse
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.errors import DomainError, MultipleZeroError, UsageError
from src.core.polynomial import Polynomial
from src.core.recurrence import generate_family
from src.core.sequences import example1, explicit, positive1
from src.perturbation.perturbation import Perturbation
from src.zeros.interlacing import (
    A_STARTS,
    B_STARTS,
    VIOLATED,
    common_zero_check,
    consecutive_interlacing,
    expected_pattern,
    interlacing_report,
    monotonicity_scan,
    sign_witness_corecursive,
    zero_lemma_check,
)
from src.zeros.ljacobi import ljacobi_seqs
from src.zeros.roots import ZeroSet, real_zeros
from src.cli.tables import TABLE_IDS, load_golden, run_table


def zs(*xs) -> ZeroSet:
    return ZeroSet(tuple(xs), tuple(0.0 for _ in xs))


def test_real_zeros_of_product():
    p = Polynomial.linear(Fraction(1)) * Polynomial.linear(Fraction(2)) * Polynomial.linear(Fraction(7, 2))
    found = real_zeros(p)
    assert np.allclose(found.zeros, [1.0, 2.0, 3.5], atol=1e-12)
    assert all(r <= 1e-10 * p.norm1() for r in found.residuals)


def test_real_zeros_skips_complex_pairs():
    # (z² + 1)(z - 3)
    p = Polynomial((Fraction(1), Fraction(0), Fraction(1))) * Polynomial.linear(Fraction(3))
    assert real_zeros(p).zeros == pytest.approx((3.0,))


def test_real_zeros_errors():
    with pytest.raises(DomainError):
        real_zeros(Polynomial.constant(Fraction(2)))
    with pytest.raises(MultipleZeroError):
        real_zeros(Polynomial.linear(Fraction(1)) ** 2)


def test_interlacing_patterns():
    assert interlacing_report(zs(1.0, 3.0), zs(0.5, 2.0)).pattern == B_STARTS
    assert interlacing_report(zs(1.0, 3.0), zs(2.0, 4.0)).pattern == A_STARTS
    assert interlacing_report(zs(1.0, 2.0), zs(3.0, 4.0)).pattern == VIOLATED
    rep = interlacing_report(zs(1.0, 2.0, 5.0), zs(1.0, 3.0, 6.0))
    assert rep.common == (1.0,)
    assert rep.pattern == A_STARTS


def test_identical_sets_are_a_starts():
    rep = interlacing_report(zs(1.0, 2.0), zs(1.0, 2.0))
    assert rep.pattern == A_STARTS and len(rep.common) == 2


def test_expected_pattern():
    assert expected_pattern(Fraction(-2)) == B_STARTS
    assert expected_pattern(Fraction(1, 2)) == A_STARTS


def test_zero_lemma_on_positive_families():
    for seqs, N in ((positive1(), 10), (ljacobi_seqs(11, 12), 8)):
        for n in range(1, N + 1):
            assert zero_lemma_check(seqs, n) == {'real_simple': True, 'positive': True, 'interlacing': True}


def test_consecutive_interlacing_rejects_shifted_sets():
    assert consecutive_interlacing(zs(1.5), zs(1.0, 2.0))
    assert not consecutive_interlacing(zs(2.5), zs(1.0, 2.0))


def test_corecursive_interlacing_follows_sign_of_mu():
    seqs = ljacobi_seqs(11, 12)
    n = 6
    A = real_zeros(generate_family(seqs, n)[n])
    for mu in (Fraction(-2), Fraction(-1, 3), Fraction(1, 2), Fraction(3)):
        B = real_zeros(generate_family(seqs.modified(c={3: seqs.c(3) + mu}), n)[n])
        assert interlacing_report(A, B).pattern == expected_pattern(mu)


def test_common_zeros_are_zeros_of_S():
    seqs = positive1()
    for k in range(1, 4):
        for pert in (Perturbation(k, Fraction(1, 2)), Perturbation(k, Fraction(0), Fraction(2))):
            assert common_zero_check(seqs, pert, 8)['ok']


def test_sign_witness_is_exact():
    for seqs in (positive1(), explicit([2, 3, 1, 4, 2, 5, 3, 1, 2], [Fraction(1, 2), 1, 2, Fraction(1, 3), 1, 3, 1, 2])):
        for k in range(1, 4):
            for n in range(k, 7):
                assert sign_witness_corecursive(seqs, Perturbation(k, Fraction(-1, 2)), n) == 0


def test_sign_witness_domain():
    with pytest.raises(DomainError):
        sign_witness_corecursive(positive1(), Perturbation(2, Fraction(0), Fraction(2)), 4)
    with pytest.raises(DomainError):
        sign_witness_corecursive(example1(), Perturbation(2, Fraction(1)), 4)


def test_monotonicity_scan():
    seqs = ljacobi_seqs(11, 12)
    up = monotonicity_scan(seqs, 3, [(Fraction(1, 10), Fraction(1, 10)), (Fraction(1, 2), Fraction(1, 2))], 6)
    assert up.direction == 'increasing' and up.monotone
    down = monotonicity_scan(seqs, 3, [(Fraction(-1, 5), Fraction(-1, 4)), (Fraction(-7, 10), Fraction(-4, 5))], 6)
    assert down.direction == 'decreasing' and down.monotone
    with pytest.raises(DomainError):
        monotonicity_scan(seqs, 3, [(Fraction(1), Fraction(-1))], 6)


def test_golden_file_covers_all_tables():
    golden = load_golden()
    assert set(golden) == set(TABLE_IDS)


@pytest.mark.parametrize('table_id', TABLE_IDS)
def test_tables_reproduce(table_id):
    report = run_table(table_id)
    assert report.passed, report.failures


def test_table1_values():
    report = run_table('T1')
    base, pert = report.data['zeros']
    assert base[0] == pytest.approx(1.049267646, abs=1e-6)
    assert base[-1] == pytest.approx(5.865251919, abs=1e-6)
    assert pert[0] == pytest.approx(0.1082567303, abs=1e-6)
    assert report.data['levels'] == [[], [3]]
    assert report.data['interlacing']['pattern'] == B_STARTS


def test_table5_violated_with_negative_zero():
    report = run_table('T5')
    assert report.data['interlacing']['pattern'] == VIOLATED
    assert min(report.data['zeros'][1]) == pytest.approx(-0.1627959860, abs=1e-6)


def test_unknown_table():
    with pytest.raises(UsageError):
        run_table('T9')


@settings(max_examples=25, deadline=None)
@given(st.fractions(min_value=Fraction(1, 4), max_value=3, max_denominator=8),
       st.integers(min_value=1, max_value=3))
def test_random_positive_corecursive_interlacing(size, k):
    seqs = positive1()
    n = 7
    A = real_zeros(generate_family(seqs, n)[n])
    for mu in (size, -size):
        B = real_zeros(generate_family(seqs.modified(c={k: seqs.c(k) + mu}), n)[n])
        assert interlacing_report(A, B).pattern == expected_pattern(mu)


if __name__ == '__main__':
    ap = argparse.ArgumentParser()
    ap.add_argument('-k', default='', help='只运行名称包含该字符串的测试')
    args = ap.parse_args()
    sys.exit(pytest.main([__file__, '-q'] + (['-k', args.k] if args.k else [])))
