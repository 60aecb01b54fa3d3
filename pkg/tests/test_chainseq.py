"""
链序列测试

最小/最大参数、SPPCS 判定、补链、η 族、δ 递推与 Szegő 多项式
"""

import sys
import argparse
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.errors import (
    BreakdownError,
    DeltaZeroError,
    DomainError,
    ModulusViolationError,
    NotAChainSequenceError,
    SequenceIndexError,
)
from src.core.polynomial import Polynomial
from src.chainseq.chain import (
    backward_parameters,
    codilated,
    complementary,
    complementary_closed_form,
    constant,
    eta_family,
    eta_maximal,
    eta_minimal,
    from_list,
    maximal_parameters,
    minimal_parameters,
    parameter_table,
    raabe_index,
    sppcs_verdict,
)
from src.chainseq.szego import (
    palindromic_omega,
    r_polynomials,
    reversal_holds,
    szego_from_chain,
    szego_from_delta,
)
from src.chainseq.verblunsky import (
    VerblunskySeq,
    caratheodory_chain,
    caratheodory_delta,
    chain_from_delta_residual,
    delta_condition_residual,
    delta_from_chain,
    gamma_from_sigma,
    perturbed_delta,
    perturbed_delta_direct,
)

QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


def sppcs_example():
    """{1/2, 1/4, 1/4, ...}"""
    return from_list([HALF, QUARTER])


def test_minimal_parameters_of_quarter():
    m = minimal_parameters(constant(QUARTER), 10)
    assert m == [Fraction(n, 2 * n + 2) for n in range(11)]


def test_not_a_chain_sequence():
    with pytest.raises(NotAChainSequenceError):
        minimal_parameters(constant(Fraction(3, 10)), 10)
    with pytest.raises(NotAChainSequenceError):
        minimal_parameters(codilated(sppcs_example(), 1, 2), 3)


def test_backward_breakdown():
    with pytest.raises(BreakdownError):
        backward_parameters(constant(Fraction(3, 10)), 5, 100)
    with pytest.raises(DomainError):
        backward_parameters(constant(QUARTER), 10, 5)


def test_explicit_list_without_extension():
    chain = from_list([HALF, QUARTER], extend=False)
    assert chain.head(2) == [HALF, QUARTER]
    with pytest.raises(SequenceIndexError):
        chain.d(3)


def test_codilated_sppcs_example():
    # ν = 1/2 在第 1 层把 {1/2, 1/4, ...} 变成常数 1/4
    chain = codilated(sppcs_example(), 1, HALF)
    assert chain.head(5) == [QUARTER] * 5
    assert minimal_parameters(chain, 8) == [Fraction(n, 2 * n + 2) for n in range(9)]
    M = maximal_parameters(chain, 8)
    assert all(abs(v - 0.5) < 1e-8 for v in M)


def test_sppcs_verdicts():
    yes = sppcs_verdict(sppcs_example(), 10)
    assert yes.sppcs and yes.method == 'backward'
    assert yes.max_gap < 1e-12
    no = sppcs_verdict(constant(QUARTER), 10)
    assert not no.sppcs
    assert no.max_gap == pytest.approx(0.5)


def test_raabe_index():
    assert raabe_index(constant(QUARTER), 1000) == pytest.approx(2.0, abs=1e-2)
    assert raabe_index(sppcs_example(), 1000) == pytest.approx(0.0, abs=1e-12)


def test_parameter_table():
    table = parameter_table(sppcs_example(), 5)
    assert table['d'] == [HALF] + [QUARTER] * 4
    assert table['minimal'] == [0] + [HALF] * 5
    assert table['sppcs']['sppcs']


def test_complementary_of_sppcs_example():
    comp = complementary(sppcs_example(), 6)
    assert comp.head(6) == [HALF] + [QUARTER] * 5


@pytest.mark.parametrize('eta', [Fraction(0), Fraction(1, 3), Fraction(2)])
def test_eta_family_augmented(eta):
    chain, info = eta_family(eta)
    assert info.augmented and info.sppcs_expected
    m = minimal_parameters(chain, 10)
    assert m[1:] == [eta_maximal(eta, n) for n in range(1, 11)]
    comp = complementary(chain, 10)
    assert comp.head(10) == [complementary_closed_form(eta, n) for n in range(1, 11)]


def test_eta_family_with_t_shifts_d1():
    chain, info = eta_family(Fraction(1), Fraction(1, 2))
    assert not info.sppcs_expected
    assert chain.d(1) == HALF * eta_maximal(1, 1)


@pytest.mark.parametrize('eta', [Fraction(-3, 4), Fraction(-1, 2)])
def test_eta_family_tail(eta):
    chain, info = eta_family(eta)
    assert not info.augmented
    m = minimal_parameters(chain, 10)
    assert m[1:] == [eta_minimal(eta, n) for n in range(1, 11)]


def test_eta_family_domain():
    with pytest.raises(DomainError):
        eta_family(-1)
    with pytest.raises(DomainError):
        eta_family(0, 1)


def test_delta_recursion_hits_zero():
    delta = delta_from_chain(HALF, constant(QUARTER), 2)
    assert delta.values() == [HALF, 0]
    with pytest.raises(DeltaZeroError):
        delta_from_chain(HALF, constant(QUARTER), 3)


def test_caratheodory_family():
    gamma = gamma_from_sigma(HALF)
    assert gamma == 1
    chain = caratheodory_chain(gamma)
    assert chain.d(2) == Fraction(1, 6)
    delta = caratheodory_delta(gamma, 8)
    assert delta_condition_residual(delta) == 0
    assert delta_from_chain(-HALF, chain, 8) == VerblunskySeq(delta.delta, 'from-chain', 1)
    check = chain_from_delta_residual(delta, chain)
    assert check['checked'] == list(range(1, 8))
    assert check['max_residual'] == 0


def test_perturbed_delta():
    chain = caratheodory_chain(1)
    delta = caratheodory_delta(1, 6)
    hat = perturbed_delta(delta, chain, 1, HALF, 2)
    assert hat.at(2) == Fraction(-2, 3)
    assert hat.at(2) == perturbed_delta_direct(delta, chain, 1, HALF)
    assert perturbed_delta(delta, chain, 2, 1, 6) == delta


def test_modulus_guard():
    with pytest.raises(ModulusViolationError):
        VerblunskySeq((HALF, Fraction(1)))
    with pytest.raises(DomainError):
        gamma_from_sigma(1)


def test_r_polynomials_palindromic():
    r = r_polynomials(0, constant(QUARTER), 4)
    assert r[3] == Polynomial((1, 1, 1, 1))
    assert palindromic_omega(r[3]) == 1
    assert palindromic_omega(Polynomial((1, 3, 3, 1))) == 3
    assert palindromic_omega(Polynomial((1, 2, 3, 1))) is None


def test_szego_chebyshev_case():
    family = szego_from_chain(0, sppcs_example(), 6)
    for n, p in enumerate(family.phi):
        assert p == Polynomial.monomial(n)


def test_szego_from_codilated_chain():
    family = szego_from_chain(0, codilated(sppcs_example(), 1, HALF), 6)
    for n in range(1, 7):
        assert family.phi[n].is_monic
        assert -family.phi[n](0) == Fraction(1, n + 1)


def test_szego_from_delta():
    free = szego_from_delta([0] * 4, 4)
    assert all(p == Polynomial.monomial(n) for n, p in enumerate(free.phi))
    assert all(s == Polynomial.one() for s in free.phi_star)
    one = szego_from_delta([HALF], 1)
    assert one.phi_star[1] == Polynomial((1, HALF))
    assert one.phi[1](0) == HALF
    assert reversal_holds(szego_from_delta(caratheodory_delta(2, 5), 5))
    with pytest.raises(DomainError):
        reversal_holds(szego_from_chain(0, sppcs_example(), 3))


@settings(max_examples=30, deadline=None)
@given(st.fractions(min_value=Fraction(1, 10), max_value=10, max_denominator=12),
       st.integers(min_value=1, max_value=5),
       st.fractions(min_value=Fraction(1, 2), max_value=Fraction(3, 2), max_denominator=8))
def test_random_perturbed_delta_agrees_with_recursion(gamma, k, nu):
    chain = caratheodory_chain(gamma)
    delta = caratheodory_delta(gamma, k + 1)
    direct = perturbed_delta_direct(delta, chain, k, nu)
    if abs(direct) < 1:
        assert perturbed_delta(delta, chain, k, nu, k + 1).at(k + 1) == direct


if __name__ == '__main__':
    ap = argparse.ArgumentParser()
    ap.add_argument('-k', default='', help='只运行名称包含该字符串的测试')
    args = ap.parse_args()
    sys.exit(pytest.main([__file__, '-q'] + (['-k', args.k] if args.k else [])))
