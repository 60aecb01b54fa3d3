"""
恒等式套件

每个套件在内置族上逐项检查对应模块的结构恒等式，结果汇总到一个 CheckReport。
精确模式下的恒等式阈值为 0；Toda 与最大参数等数值检查使用配置中的阈值。
"""

from fractions import Fraction
from typing import Callable, Dict, List, Tuple

import numpy as np

from src.chainseq.chain import (
    adaptive_maximal,
    complementary,
    codilated,
    eta_family,
    from_list,
    sppcs_verdict,
)
from src.chainseq.szego import reversal_holds, szego_from_chain, szego_from_delta
from src.chainseq.verblunsky import (
    caratheodory_chain,
    caratheodory_delta,
    delta_condition_residual,
    delta_from_chain,
    perturbed_delta,
    perturbed_delta_direct,
)
from src.core.errors import RIError, UsageError
from src.core.polynomial import Polynomial
from src.core.recurrence import casoratti_identity_residual
from src.perturbation.perturbation import (
    Perturbation,
    apply_perturbation,
    perturbed_family_direct,
    perturbed_second_kind_direct,
)
from src.perturbation.representation import perturbed_family_represented, perturbed_second_kind_represented
from src.perturbation.transfer import expected_det_Mk, transfer_identity_residual, transfer_matrix_Mk
from src.stieltjes.fraction import ri_fraction, screen_point, tail_fraction
from src.stieltjes.homography import (
    cofactor_consistent,
    composition_consistent,
    full_law_residual,
    tail_from_full_residual,
    tail_law_residual,
)
from src.toda.equations import PerturbationSchedule, affected_levels, toda_rhs, unhat
from src.toda.flow import flow_order, integrate_flow
from src.toda.moments import DiscreteMeasure, TodaParams, coeffs_from_moments, to_mpf
from src.utils.config import load_config
from src.utils.report import CheckReport
from src.cli.specs import measure_from_mapping, parse_family, parse_rational

SUITE_NAMES = ('representation', 'transfer', 'stieltjes', 'toda', 'chain')

# (族描述, 最高次数)；L-Jacobi(11,12) 在 n = 10 处有极点
SUITE_FAMILIES: Tuple[Tuple[str, int], ...] = (
    ('builtin: example1', 12),
    ('builtin: positive1', 12),
    ('builtin: ljacobi, a=11, c=12', 9),
    ('builtin: ljacobi, a=-12, c=-10', 12),
    ('builtin: hyper2, b=1/2, c=3', 12),
    ('builtin: eta, eta=1', 12),
)


def kinds(k: int) -> List[Perturbation]:
    """co-recursive / co-dilated / co-modified；k = 0 时只有 co-recursive"""
    perts = [Perturbation(k, Fraction(1, 2))]
    if k >= 1:
        perts += [Perturbation(k, Fraction(0), Fraction(3)),
                  Perturbation(k, Fraction(-1, 3), Fraction(1, 2))]
    return perts


def _max_coeff(p: Polynomial):
    return max((abs(c) for c in p.coeffs), default=Fraction(0))


def _guarded(report: CheckReport, name: str, check: Callable[[], None]):
    try:
        check()
    except RIError as e:
        report.add_error(name, e)


# ---- representation -------------------------------------------------------

def representation_suite(config: Dict, max_k: int = 5) -> CheckReport:
    report = CheckReport('suite: representation')
    for spec, N in SUITE_FAMILIES:
        seqs = parse_family(spec)
        for k in range(0, max_k + 1):
            for pert in kinds(k):
                name = f"{seqs.describe()} {pert.to_spec()}"

                def check():
                    rep = perturbed_family_represented(seqs, pert, N)
                    direct = perturbed_family_direct(seqs, pert, N)
                    worst = max(_max_coeff(a - b) for a, b in zip(rep, direct))
                    report.add(f"P repr {name}", worst)
                    rep_q = perturbed_second_kind_represented(seqs, pert, N)
                    direct_q = perturbed_second_kind_direct(seqs, pert, N)
                    report.add(f"Q repr {name}", max(_max_coeff(a - b) for a, b in zip(rep_q, direct_q)))

                _guarded(report, f"repr {name}", check)

        if seqs.positive_L:
            for k in range(1, 5):
                def casoratti_check():
                    worst = max(_max_coeff(casoratti_identity_residual(seqs, k, n))
                                for n in range(k, min(N, 10) + 1))
                    report.add(f"casoratti {seqs.describe()} k={k}", worst)

                _guarded(report, f"casoratti {seqs.describe()} k={k}", casoratti_check)
    return report


# ---- transfer -------------------------------------------------------------

def transfer_suite(config: Dict, max_k: int = 5) -> CheckReport:
    report = CheckReport('suite: transfer')
    for spec, N in SUITE_FAMILIES:
        seqs = parse_family(spec)
        for k in range(1, max_k + 1):
            for pert in kinds(k):
                name = f"{seqs.describe()} {pert.to_spec()}"

                def check():
                    worst = Fraction(0)
                    for n in range(k, N + 1):
                        top, bottom = transfer_identity_residual(seqs, pert, n)
                        worst = max(worst, _max_coeff(top), _max_coeff(bottom))
                    report.add(f"M_k identity {name}", worst)
                    M = transfer_matrix_Mk(seqs, pert)
                    report.add(f"det M_k {name}", _max_coeff(M.det() - expected_det_Mk(seqs, pert)))
                    report.add_bool(f"cofactor {name}", cofactor_consistent(seqs, pert))

                _guarded(report, f"transfer {name}", check)
    return report


# ---- stieltjes ------------------------------------------------------------

def stieltjes_suite(config: Dict, max_k: int = 3) -> CheckReport:
    report = CheckReport('suite: stieltjes')
    cfg = config['stieltjes']
    depth = cfg['max_depth']
    points = [parse_rational(str(z)) for z in cfg['sample_points']]
    for spec, N in SUITE_FAMILIES:
        seqs = parse_family(spec)
        for k in range(1, max_k + 1):
            # 全分式截断到 k+1+m，不能越过族的可用阶数 N
            top = min(depth, N - k - 1)
            if top < 1:
                continue
            for pert in kinds(k):
                name = f"{seqs.describe()} {pert.to_spec()}"
                perturbed = ri_fraction(apply_perturbation(seqs, pert))
                fractions = [(ri_fraction(seqs), k + 1 + top), (perturbed, k + 1 + top),
                             (tail_fraction(seqs, k), top)]
                for z0 in points:
                    def check():
                        if z0 == points[0]:
                            report.add_bool(f"composition {name}", composition_consistent(seqs, pert))
                        z = screen_point(fractions, z0, cfg['screen_retries'])
                        for m in range(1, top + 1):
                            report.add(f"tail law {name} z={z} m={m}", tail_law_residual(seqs, pert, z, m))
                            report.add(f"full law {name} z={z} m={m}",
                                       full_law_residual(seqs, pert, z, k + 1 + m))
                            report.add(f"tail-from-full {name} z={z} m={m}",
                                       tail_from_full_residual(seqs, k, z, m))

                    _guarded(report, f"laws {name} z={z0}", check)
    return report


# ---- toda -----------------------------------------------------------------

def measure_from_config(cfg: Dict) -> DiscreteMeasure:
    return measure_from_mapping(cfg['measure'])


def toda_suite(config: Dict) -> CheckReport:
    cfg = config['toda']
    report = CheckReport('suite: toda', {'order': 0.3, 'rk4': 1e-6, 'default': 0.0})
    measure = measure_from_config(cfg)
    params = TodaParams(parse_rational(str(cfg['p'])), parse_rational(str(cfg['q'])))
    t0, h = parse_rational(str(cfg['t0'])), float(cfg['h'])
    N = measure.M - 1
    sched = PerturbationSchedule.constant(2, Fraction(3, 10), Fraction(3, 2))

    for label, s in (('unperturbed', None), ('perturbed', sched)):
        def order_check():
            fit = flow_order(measure, params, s, t0, h, N)
            report.add(f"order {label}", fit['order'] - 2.0, detail=fit)

        _guarded(report, f"order {label}", order_check)

    def locality_check():
        frame = coeffs_from_moments(measure, params.at(t0), N + 1, dps=cfg['mp_dps'])
        c_levels, lam_levels = affected_levels(sched.k, dilation=True)
        mp_params = TodaParams(to_mpf(params.p), to_mpf(params.q), frame.t)
        for n in range(1, N + 1):
            pert_rhs = toda_rhs(frame, mp_params, sched, n)
            free_rhs = toda_rhs(frame, mp_params, None, n)
            if n not in c_levels:
                report.add(f"locality c_{n}", float(abs(pert_rhs[0] - free_rhs[0])))
            if n >= 2 and n not in lam_levels:
                report.add(f"locality lambda_{n}", float(abs(pert_rhs[1] - free_rhs[1])))

    _guarded(report, 'locality', locality_check)

    T, steps = Fraction(1, 5), 2000
    for label, s in (('unperturbed', None), ('perturbed', sched)):
        def rk4_check():
            start = coeffs_from_moments(measure, params.at(t0), measure.M, dps=cfg['mp_dps'])
            end = coeffs_from_moments(measure, params.at(t0 + T), measure.M, dps=cfg['mp_dps'])
            if s is not None:
                start, end = unhat(start, s, t0), unhat(end, s, t0 + T)
            traj = integrate_flow(start, params, s, float(T), steps,
                                  blowup=cfg['blowup'], floor=cfg['denominator_floor'])
            err = np.max(np.abs(traj.final.state() - end.state()))
            report.add(f"rk4 {label}", float(err))

        _guarded(report, f"rk4 {label}", rk4_check)
    return report


# ---- chain ----------------------------------------------------------------

def chain_suite(config: Dict) -> CheckReport:
    cfg = config['chain']
    report = CheckReport('suite: chain', {'maximal': 1e-8, 'default': 0.0})
    kw = dict(tail_depth=cfg['tail_depth'], depth_tol=cfg['depth_tol'], max_depth=cfg['max_depth'])

    base = from_list(['1/2', '1/4'])
    co = codilated(base, 1, Fraction(1, 2))
    m = co.minimal(8)
    report.add('codilated minimal n/(2n+2)',
               max(abs(m[n] - Fraction(n, 2 * n + 2)) for n in range(9)))
    M = adaptive_maximal(co, 8, **kw)
    report.add('codilated maximal 1/2', max(abs(v - 0.5) for v in M.values))
    szego = szego_from_chain(0, co, 6)
    report.add("codilated -phi_n(0) = 1/(n+1)",
               max(abs(a - Fraction(1, n + 1)) for n, a in enumerate(szego.verblunsky, start=1)))

    comp = complementary(eta_family(0)[0], 8)
    cheb = szego_from_chain(0, comp, 8)
    report.add('eta=0 complementary phi_n = z^n',
               max(_max_coeff(p - Polynomial.monomial(n)) for n, p in enumerate(cheb.phi)))

    delta = caratheodory_delta(1, 8)
    report.add('caratheodory delta condition', delta_condition_residual(delta))
    chain = caratheodory_chain(1)
    rec = delta_from_chain(delta.at(1), chain, 8)
    report.add('caratheodory delta recursion', max(abs(a - b) for a, b in zip(rec.delta, delta.delta)))
    for k in (1, 2, 3):
        def proposition_check():
            hat = perturbed_delta(delta, chain, k, Fraction(1, 2), k + 1)
            report.add(f"perturbed delta k={k}",
                       abs(hat.at(k + 1) - perturbed_delta_direct(delta, chain, k, Fraction(1, 2))))

        _guarded(report, f"perturbed delta k={k}", proposition_check)
    report.add_bool('szego reversal', reversal_holds(szego_from_delta(caratheodory_delta(2, 8), 8)))

    for eta, expected in ((Fraction(1), True), (Fraction(-3, 4), True)):
        def sppcs_check():
            verdict = sppcs_verdict(eta_family(eta)[0], 10, sppcs_tol=cfg['sppcs_tol'],
                                    raabe_depth=cfg['raabe_depth'], **kw)
            report.add_bool(f'sppcs eta={eta}', verdict.sppcs == expected, detail=verdict.to_json())

        _guarded(report, f'sppcs eta={eta}', sppcs_check)
    return report


SUITES: Dict[str, Callable[[Dict], CheckReport]] = {
    'representation': representation_suite,
    'transfer': transfer_suite,
    'stieltjes': stieltjes_suite,
    'toda': toda_suite,
    'chain': chain_suite,
}


def run_suite(name: str, config: Dict = None) -> CheckReport:
    if name not in SUITES:
        raise UsageError(f"未知套件 {name!r}（可选 {', '.join(SUITE_NAMES)}）")
    return SUITES[name](config or load_config())
