"""
命令行入口

    python -m src.cli.harness table T1
    python -m src.cli.harness suite representation --out reports/repr.json
    python -m src.cli.harness zeros --family "builtin: ljacobi, a=11, c=12" --perturb "k=3,mu=-2" --n 6
    python -m src.cli.harness chain --d "1/2, 1/4" --perturb-nu 1,1/2 --szego 6
    python -m src.cli.harness toda --measure "nodes=[1, 2, 3], weights=[1, 1/2, 2]" --N 2 --sched 0,1/3,2

退出码: 0 全部检查通过；1 有检查失败；2 用法错误（未知表号、描述无法解析等）。
报告写到 stdout 时，控制台摘要改写到 stderr。
"""

import argparse
import sys
from typing import Dict, List, Optional

import numpy as np

from src.chainseq.chain import codilated, complementary, parameter_table
from src.chainseq.szego import palindromic_omegas, reversal_holds, szego_from_chain, szego_from_delta
from src.chainseq.verblunsky import chain_from_delta_residual, delta_from_chain
from src.core.errors import RIError, SpecParseError, UsageError
from src.core.recurrence import generate_family, generate_second_kind
from src.core.scalar import FLOAT, MODES, RATIONAL
from src.perturbation.perturbation import apply_perturbations, perturbation_summary, perturbed_family_direct
from src.perturbation.representation import perturbed_family_represented
from src.stieltjes.fraction import ri_fraction, screen_point, tail_fraction
from src.stieltjes.homography import full_law_residual, tail_from_full_residual, tail_law_residual
from src.toda.equations import PerturbationSchedule, unhat
from src.toda.flow import flow_order, integrate_flow, verify_flow
from src.toda.moments import DiscreteMeasure, TodaParams, coeffs_from_moments
from src.utils.config import load_config, load_yaml
from src.utils.io import write_csv, write_json, zero_rows
from src.utils.report import CheckReport
from src.zeros.interlacing import common_zero_check, interlacing_report
from src.zeros.roots import real_zeros
from src.cli.specs import (
    measure_from_mapping,
    parse_chain,
    parse_family,
    parse_integrate,
    parse_level_value,
    parse_list,
    parse_measure,
    parse_perturbations,
    parse_rational,
    parse_schedule,
)
from src.cli.suites import SUITE_NAMES, measure_from_config, run_suite
from src.cli.tables import TABLE_IDS, run_table

# 需要求根或指数函数的子命令；rational 模式下须显式 --allow-rational
FLOAT_ONLY = ('zeros', 'interlace', 'toda')

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog='ri-copoly', description='R_I 型正交多项式扰动工具')
    ap.add_argument('--mode', choices=MODES, default=None,
                    help='数值模式（缺省: 求根类子命令用 float，其余取配置 numeric.mode）')
    ap.add_argument('--tol', type=float, default=None, help='浮点比较容差（覆盖配置）')
    ap.add_argument('--out', default=None, help='报告输出路径（缺省 stdout）')
    ap.add_argument('--format', choices=('json', 'csv'), default='json')
    ap.add_argument('--config', default=None, help='YAML 配置文件')
    ap.add_argument('--seed', type=int, default=None, help='追加随机有理采样点的种子')
    ap.add_argument('--allow-rational', action='store_true',
                    help='允许 rational 模式运行求根类子命令（只做代数检查时使用）')
    sub = ap.add_subparsers(dest='command', required=True)

    p = sub.add_parser('family', help='生成 P_n（及 Q_n）')
    p.add_argument('--family', required=True)
    p.add_argument('--n', type=int, default=6)
    p.add_argument('--second-kind', action='store_true')

    p = sub.add_parser('perturb', help='扰动族：直接递推与表示公式对照')
    p.add_argument('--family', required=True)
    p.add_argument('--perturb', required=True)
    p.add_argument('--n', type=int, default=6)

    p = sub.add_parser('zeros', help='P_n 与扰动 P_n 的实零点')
    p.add_argument('--family', required=True)
    p.add_argument('--perturb', default=None)
    p.add_argument('--n', type=int, default=6)

    p = sub.add_parser('interlace', help='交错分类与公共零点')
    p.add_argument('--family', required=True)
    p.add_argument('--perturb', required=True)
    p.add_argument('--n', type=int, default=6)

    p = sub.add_parser('stieltjes', help='连分式截断恒等式')
    p.add_argument('--family', required=True)
    p.add_argument('--perturb', required=True)
    p.add_argument('--z', default=None, help='采样点列表，如 "7, 11/3"')
    p.add_argument('--depth', type=int, default=None)

    p = sub.add_parser('toda', help='相对论 Toda 方程差分检验与 RK4 积分')
    p.add_argument('--measure', default=None, help='"nodes=[...], weights=[...]"，缺省取配置')
    p.add_argument('--measure-file', default=None, help='含 nodes / weights 的 YAML 文件')
    p.add_argument('--p', default=None)
    p.add_argument('--q', default=None)
    p.add_argument('--t0', default=None)
    p.add_argument('--h', type=float, default=None)
    p.add_argument('--N', type=int, default=None, help='检验 n = 1..N（缺省 M-1）')
    p.add_argument('--sched', default=None, help='k,mu,nu（第 k+1 层的常值扰动）')
    p.add_argument('--integrate', default=None, help='T,steps（steps 缺省 2000）')

    p = sub.add_parser('chain', help='链序列、最小/最大参数与 Szegő 多项式')
    p.add_argument('--d', required=True)
    p.add_argument('--n', type=int, default=10)
    p.add_argument('--complement', action='store_true')
    p.add_argument('--perturb-nu', default=None, help='"level,nu"：d_level 乘以 ν')
    p.add_argument('--szego', type=int, default=None)
    p.add_argument('--delta0', default=None, help='δ_1 初值，启用 δ 递推')

    p = sub.add_parser('table', help='复现零点表')
    p.add_argument('id', help=' | '.join(TABLE_IDS))

    p = sub.add_parser('suite', help='运行恒等式套件')
    p.add_argument('name', help=' | '.join(SUITE_NAMES))
    return ap


def resolve_mode(args, config: Dict) -> str:
    if args.mode is None:
        return FLOAT if args.command in FLOAT_ONLY else config['numeric']['mode']
    if args.mode == RATIONAL and args.command in FLOAT_ONLY and not args.allow_rational:
        raise UsageError(f"{args.command} 需要求根或指数函数，rational 模式须加 --allow-rational")
    return args.mode


def _tol(mode: str, config: Dict) -> Optional[float]:
    return None if mode == RATIONAL else config['numeric']['float_tol']


def _poly_tol(mode: str, config: Dict) -> Optional[float]:
    """多项式逐系数比较的容差"""
    return None if mode == RATIONAL else config['numeric']['poly_equal_tol']


def _sample_points(text: Optional[str], config: Dict, seed: Optional[int]) -> list:
    points = parse_list(text) if text else [parse_rational(str(z)) for z in config['stieltjes']['sample_points']]
    if seed is not None:
        rng = np.random.default_rng(seed)
        points += [parse_rational(f"{int(rng.integers(20, 200))}/{int(rng.integers(1, 10))}")
                   for _ in range(3)]
    return points


# ---- 子命令 ---------------------------------------------------------------

def cmd_family(args, config, mode) -> CheckReport:
    seqs = parse_family(args.family, mode)
    report = CheckReport(f"family: {seqs.describe()}")
    P = generate_family(seqs, args.n)
    for n, p in enumerate(P):
        report.add_bool(f"P_{n} monic degree {n}", p.degree == n and p.is_monic)
    report.data.update({'family': seqs.describe(), 'coefficients': seqs.table(args.n), 'P': P})
    if args.second_kind:
        report.data['Q'] = generate_second_kind(seqs, args.n)
    return report


def cmd_perturb(args, config, mode) -> CheckReport:
    seqs = parse_family(args.family, mode)
    perts = parse_perturbations(args.perturb, mode)
    tol = _poly_tol(mode, config)
    report = CheckReport(f"perturb: {seqs.describe()}")
    direct = perturbed_family_direct(seqs, perts, args.n)
    represented = perturbed_family_represented(seqs, perts, args.n, tol)
    for n, (a, b) in enumerate(zip(represented, direct)):
        report.add_bool(f"P_{n} representation = direct", a.equals(b, tol))
    report.data.update({'family': seqs.describe(), 'perturbations': perturbation_summary(perts),
                        'P_direct': direct, 'P_represented': represented})
    return report


def cmd_zeros(args, config, mode) -> CheckReport:
    seqs = parse_family(args.family, mode)
    zcfg = config['zeros']
    report = CheckReport(f"zeros: {seqs.describe()} n={args.n}")
    polys = {'P_n': generate_family(seqs, args.n)[args.n]}
    if args.perturb:
        perts = parse_perturbations(args.perturb, mode)
        polys['P_n(mu,nu)'] = perturbed_family_direct(seqs, perts, args.n)[args.n]
    series = {}
    for name, P in polys.items():
        zs = real_zeros(P, zcfg['residual_tol'], zcfg['newton_max_iter'], zcfg['imag_tol'], label=name)
        # real_zeros 的残差要求相对于 max(1, ‖P‖₁)
        bound = zcfg['residual_tol'] * max(1.0, P.norm1())
        report.add(f"{name} max residual", max(zs.residuals, default=0.0), bound,
                   detail={'count': len(zs), 'degree': P.degree})
        series[name] = zs
    report.data['series'] = series
    return report


def cmd_interlace(args, config, mode) -> CheckReport:
    seqs = parse_family(args.family, mode)
    perts = parse_perturbations(args.perturb, mode)
    if len(perts) != 1:
        raise UsageError("interlace 只接受单层扰动")
    pert = perts[0]
    zcfg = config['zeros']
    report = CheckReport(f"interlace: {seqs.describe()} {pert.to_spec()}")
    A = real_zeros(generate_family(seqs, args.n)[args.n], zcfg['residual_tol'], label='P_n')
    B = real_zeros(perturbed_family_direct(seqs, pert, args.n)[args.n], zcfg['residual_tol'],
                   label='P_n(mu,nu)')
    inter = interlacing_report(A, B, zcfg['common_tol'])
    common = common_zero_check(seqs, pert, args.n, zcfg['residual_tol'], zcfg['common_tol'])
    report.add_bool('common zeros explained by S_k', common['ok'], detail=common)
    report.data.update({'interlacing': inter, 'common': common, 'series': {'P_n': A, 'P_n(mu,nu)': B}})
    return report


def cmd_stieltjes(args, config, mode) -> CheckReport:
    seqs = parse_family(args.family, mode)
    perts = parse_perturbations(args.perturb, mode)
    if len(perts) != 1:
        raise UsageError("stieltjes 只接受单层扰动")
    pert, k = perts[0], perts[0].k
    cfg = config['stieltjes']
    depth = args.depth or cfg['max_depth']
    tol = _tol(mode, config) or 0.0
    report = CheckReport(f"stieltjes: {seqs.describe()} {pert.to_spec()}", {'default': tol})
    fractions = [(ri_fraction(seqs), k + 1 + depth),
                 (ri_fraction(apply_perturbations(seqs, [pert])), k + 1 + depth),
                 (tail_fraction(seqs, k), depth)]
    for z0 in _sample_points(args.z, config, args.seed):
        z = screen_point(fractions, z0 if mode == RATIONAL else float(z0), cfg['screen_retries'])
        for m in range(1, depth + 1):
            report.add(f"tail law z={z} m={m}", tail_law_residual(seqs, pert, z, m))
            report.add(f"full law z={z} m={m}", full_law_residual(seqs, pert, z, k + 1 + m))
            report.add(f"tail-from-full z={z} m={m}", tail_from_full_residual(seqs, k, z, m))
    return report


def _toda_measure(args, cfg: Dict) -> DiscreteMeasure:
    if args.measure and args.measure_file:
        raise UsageError("--measure 与 --measure-file 只能给一个")
    if args.measure:
        return parse_measure(args.measure)
    if args.measure_file:
        return measure_from_mapping(load_yaml(args.measure_file))
    return measure_from_config(cfg)


def cmd_toda(args, config, mode) -> CheckReport:
    cfg = config['toda']
    measure = _toda_measure(args, cfg)
    params = TodaParams(parse_rational(str(args.p or cfg['p'])), parse_rational(str(args.q or cfg['q'])))
    t0 = parse_rational(str(args.t0 or cfg['t0']))
    h = args.h or float(cfg['h'])
    N = measure.M - 1 if args.N is None else args.N
    if not 1 <= N <= measure.M - 1:
        raise UsageError(f"--N 必须在 [1, {measure.M - 1}] 内，得到 {N}")
    sched = None
    if args.sched:
        sched = PerturbationSchedule.constant(*parse_schedule(args.sched))
    T, steps = parse_integrate(args.integrate) if args.integrate else (None, 0)
    report = CheckReport(f"toda: p={params.p}, q={params.q}, N={N}", {'order': 0.3, 'rk4': 1e-6})
    fit = flow_order(measure, params, sched, t0, h, N)
    report.add('order', fit['order'] - 2.0, detail=fit)
    report.data['measure'] = {'nodes': list(measure.nodes), 'weights': list(measure.weights)}
    report.data['flow'] = verify_flow(measure, params, sched, t0, h, N, dps=cfg['mp_dps'])
    if T is not None:
        start = coeffs_from_moments(measure, params.at(t0), measure.M, dps=cfg['mp_dps'])
        end = coeffs_from_moments(measure, params.at(t0 + T), measure.M, dps=cfg['mp_dps'])
        if sched is not None:
            start, end = unhat(start, sched, t0), unhat(end, sched, t0 + T)
        traj = integrate_flow(start, params, sched, float(T), steps,
                              sample_every=max(steps // 20, 1),
                              blowup=cfg['blowup'], floor=cfg['denominator_floor'])
        report.add('rk4 endpoint', float(np.max(np.abs(traj.final.state() - end.state()))))
        report.data['trajectory'] = traj.rows()
    return report


def cmd_chain(args, config, mode) -> CheckReport:
    cfg = config['chain']
    chain = parse_chain(args.d).with_mode(mode)
    if args.perturb_nu:
        level, nu = parse_level_value(args.perturb_nu)
        chain = codilated(chain, level, nu)
    if args.complement:
        chain = complementary(chain, args.n + 1)
    report = CheckReport(f"chain: {chain.describe()}")
    table = parameter_table(chain, args.n, tail_depth=cfg['tail_depth'], depth_tol=cfg['depth_tol'],
                            max_depth=cfg['max_depth'], sppcs_tol=cfg['sppcs_tol'],
                            raabe_depth=cfg['raabe_depth'])
    report.add_bool('0 < m_n < 1', all(0 < m < 1 for m in table['minimal'][1:]))
    report.add_bool('m_n <= M_n', all(float(m) <= M + cfg["sppcs_tol"]
                                      for m, M in zip(table['minimal'], table['maximal'])))
    report.data['parameters'] = table

    if args.delta0 is not None:
        delta = delta_from_chain(parse_rational(args.delta0), chain, args.n)
        back = chain_from_delta_residual(delta, chain)
        report.add('d from delta', back['max_residual'], _tol(mode, config), detail=back)
        report.data['delta'] = delta
        if args.szego:
            family = szego_from_delta(delta, min(args.szego, delta.last))
            report.add_bool('phi* reversal', reversal_holds(family, _poly_tol(mode, config)))
            report.data['szego_from_delta'] = family

    if args.szego:
        family = szego_from_chain(0, chain, args.szego)
        report.data['szego'] = family
        report.data['palindromic_omega'] = palindromic_omegas(family.phi, _poly_tol(mode, config))
    return report


def cmd_table(args, config, mode) -> CheckReport:
    return run_table(args.id, config)


def cmd_suite(args, config, mode) -> CheckReport:
    return run_suite(args.name, config)


COMMANDS = {
    'family': cmd_family,
    'perturb': cmd_perturb,
    'zeros': cmd_zeros,
    'interlace': cmd_interlace,
    'stieltjes': cmd_stieltjes,
    'toda': cmd_toda,
    'chain': cmd_chain,
    'table': cmd_table,
    'suite': cmd_suite,
}


def csv_rows(command: str, report: CheckReport) -> List[dict]:
    """zeros / interlace / table 输出 (series, x)；toda 输出轨迹；其余输出检查项"""
    data = report.data
    if 'series' in data:
        return zero_rows(data['series'])
    if command == 'toda' and 'trajectory' in data:
        return data['trajectory']
    if command == 'chain':
        table = data['parameters']
        return [{'n': n, 'd': d if n >= 1 else '', 'minimal': m, 'maximal': M}
                for n, (d, m, M) in enumerate(zip([None] + table['d'], table['minimal'], table['maximal']))]
    return [{'name': c['name'], 'residual': c['residual'], 'passed': c['passed']}
            for c in report.to_json()['checks']]


def main(argv: List[str] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    console = sys.stderr if args.out is None else sys.stdout
    try:
        config = load_config(args.config)
        if args.tol is not None:
            config['numeric']['float_tol'] = args.tol
            config['numeric']['poly_equal_tol'] = args.tol
            config['tables']['golden_tol'] = args.tol
        mode = resolve_mode(args, config)
        print(f"🚀 {args.command} (mode={mode})", file=console)
        report = COMMANDS[args.command](args, config, mode)
    except (UsageError, SpecParseError) as e:
        print(f"❌ 用法错误: {e}", file=sys.stderr)
        return EXIT_USAGE
    except RIError as e:
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILED

    if args.format == 'csv':
        write_csv(csv_rows(args.command, report), args.out)
    else:
        write_json(report.to_json(), args.out)
    report.print_summary(file=console)
    if args.out is not None:
        print(f"✅ 报告已写入 {args.out}", file=console)
    return EXIT_OK if report.passed else EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
