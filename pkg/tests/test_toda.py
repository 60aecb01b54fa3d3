"""
Toda 流测试

矩泛函、由矩恢复系数、扰动方程的局部性、中心差分收敛阶与 RK4 积分
"""

import sys
import argparse
from fractions import Fraction
from pathlib import Path

import mpmath
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.errors import BlowUpError, DomainError
from src.toda.equations import PerturbationSchedule, affected_levels, toda_rhs, unhat
from src.toda.flow import flow_order, integrate_flow, verify_flow
from src.toda.moments import (
    DiscreteMeasure,
    TodaParams,
    a_n0_residual,
    coeffs_from_moments,
    default_measure,
    moment,
    moment_mp,
    recurrence_residual,
    sigma_residuals,
)

PARAMS = TodaParams(1, 1, 0)
T0 = Fraction(1, 10)
H = 1e-3


def frame_at(t, N=6, measure=None):
    return coeffs_from_moments(measure or default_measure(), PARAMS.at(t), N)


def test_measure_validation():
    with pytest.raises(DomainError):
        DiscreteMeasure((Fraction(1), Fraction(2)), (Fraction(1),))
    with pytest.raises(DomainError):
        DiscreteMeasure.uniform([Fraction(-1), Fraction(2)])
    with pytest.raises(DomainError):
        DiscreteMeasure.uniform([Fraction(1), Fraction(1)])


def test_exact_moment_at_time_zero():
    # 1 + 9/4 + 4 + 25/4 + 9 + 49/4
    assert moment(default_measure(), PARAMS, 2) == Fraction(139, 4)
    assert moment(default_measure(), PARAMS, 0) == 6


def test_float_moment_matches_mpmath():
    params = PARAMS.at(Fraction(1, 3))
    for m in (-3, 0, 4):
        with mpmath.workdps(30):
            ref = float(moment_mp(default_measure(), params, m))
        assert moment(default_measure(), params, m) == pytest.approx(ref, rel=1e-12)


def test_coefficients_from_moments():
    frame = frame_at(T0)
    assert frame.closed and frame.N == 6
    assert frame.c[0] == 1 and frame.lam[1] == 0
    assert recurrence_residual(frame) < 1e-20
    assert a_n0_residual(frame) < 1e-20
    assert max(sigma_residuals(frame).values()) < 1e-15


def test_open_frame_and_index_limits():
    frame = frame_at(T0, N=4)
    assert not frame.closed
    with pytest.raises(DomainError):
        frame_at(T0, N=7)


def test_affected_levels():
    assert affected_levels(2, False) == ({2, 3, 4}, {3, 4})
    assert affected_levels(2, True) == ({2, 3, 4}, {2, 3, 4})


@pytest.mark.parametrize('nu', [Fraction(1), Fraction(2)])
def test_perturbed_equations_are_local(nu):
    k = 2
    sched = PerturbationSchedule.constant(k, Fraction(1, 3), nu)
    frame = frame_at(T0)
    c_levels, lam_levels = affected_levels(k, nu != 1)
    with mpmath.workdps(40):
        for n in range(1, frame.N + 1):
            plain_c, plain_l = toda_rhs(frame, PARAMS, None, n)
            pert_c, pert_l = toda_rhs(frame, PARAMS, sched, n)
            assert (pert_c != plain_c) == (n in c_levels), n
            if n >= 2:
                assert (pert_l != plain_l) == (n in lam_levels), n


def test_schedule_rejects_nonpositive_nu():
    sched = PerturbationSchedule(1, lambda t: 0, lambda t: 1 - 10 * t)
    sched.at(Fraction(1, 20))
    with pytest.raises(DomainError):
        sched.at(Fraction(1, 5))


def test_unhat_restores_coefficients():
    sched = PerturbationSchedule.constant(1, Fraction(1, 2), Fraction(3))
    frame = frame_at(T0)
    plain = unhat(frame, sched)
    assert plain.c[2] == frame.c[2] + mpmath.mpf(1) / 2
    assert plain.lam[2] == frame.lam[2] / 3
    assert plain.c[3] == frame.c[3]


def test_unperturbed_flow_second_order():
    report = verify_flow(default_measure(), PARAMS, None, T0, H, 4)
    assert report.max_residual < 1e-4
    order = flow_order(default_measure(), PARAMS, None, T0, H, 4)
    assert 1.8 < order['order'] < 2.2


@pytest.mark.parametrize('sched', [
    PerturbationSchedule.constant(1, Fraction(1, 3), Fraction(2)),
    PerturbationSchedule.constant(2, Fraction(-1, 4)),
    PerturbationSchedule(1, lambda t: t / 5, lambda t: 1 + t, lambda t: Fraction(1, 5), lambda t: 1),
])
def test_perturbed_flow_second_order(sched):
    order = flow_order(default_measure(), PARAMS, sched, T0, H, 4)
    assert order['r_h'] < 1e-4
    assert 1.8 < order['order'] < 2.2


def test_integrate_matches_moments():
    T = 0.05
    start = frame_at(T0)
    traj = integrate_flow(start, PARAMS, None, T, 200, sample_every=50)
    assert len(traj.times) == 5
    target = frame_at(T0 + Fraction(1, 20))
    for n in range(1, 7):
        assert traj.final.c[n] == pytest.approx(float(target.c[n]), rel=1e-7)
    for n in range(2, 7):
        assert traj.final.lam[n] == pytest.approx(float(target.lam[n]), rel=1e-7)
    assert set(traj.rows()[0]) >= {'t', 'c_1', 'lambda_2'}


def test_integrate_perturbed_flow():
    sched = PerturbationSchedule.constant(1, Fraction(1, 3), Fraction(2))
    start = unhat(frame_at(T0), sched)
    traj = integrate_flow(start, PARAMS, sched, 0.05, 200)
    target = unhat(frame_at(T0 + Fraction(1, 20)), sched)
    for n in range(1, 7):
        assert traj.final.c[n] == pytest.approx(float(target.c[n]), rel=1e-7)


def test_integrate_guards():
    with pytest.raises(DomainError):
        integrate_flow(frame_at(T0, N=3), PARAMS, None, 0.1, 10)
    with pytest.raises(BlowUpError):
        integrate_flow(frame_at(T0), PARAMS, None, 0.1, 10, blowup=1e-3)


if __name__ == '__main__':
    ap = argparse.ArgumentParser()
    ap.add_argument('-k', default='', help='只运行名称包含该字符串的测试')
    args = ap.parse_args()
    sys.exit(pytest.main([__file__, '-q'] + (['-k', args.k] if args.k else [])))
