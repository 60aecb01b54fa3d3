"""
命令行测试

描述解析、各子命令的退出码与 JSON / CSV 报告
"""

import sys
import json
import argparse
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.errors import SpecParseError
from src.core.scalar import FLOAT, RATIONAL
from src.cli.harness import EXIT_FAILED, EXIT_OK, EXIT_USAGE, _poly_tol, main
from src.cli.specs import (
    parse_chain,
    parse_family,
    parse_integrate,
    parse_level_value,
    parse_list,
    parse_measure,
    parse_perturbations,
    parse_schedule,
)
from src.cli.suites import run_suite
from src.utils.config import load_config

LJACOBI = "builtin: ljacobi, a=11, c=12"


def run(tmp_path, *argv, name='report.json'):
    out = tmp_path / name
    code = main(['--out', str(out), *argv])
    return code, out


def load(path):
    with open(path, encoding='utf-8') as f:
        return json.load(f)


# ---- 描述解析 --------------------------------------------------------------

def test_parse_family_builtin_and_explicit():
    seqs = parse_family(LJACOBI)
    assert seqs.c(0) == parse_family("builtin: ljacobi, a=11, c=12").c(0)
    seqs = parse_family("c=[1, 2, 3], lambda=[1/4, 1/2], a=[0, 1]")
    assert seqs.lam(2) == Fraction(1, 2) and seqs.a(2) == 1
    assert parse_family("builtin: example1", FLOAT).mode == FLOAT


@pytest.mark.parametrize('text', [
    "builtin: nosuch",
    "builtin: ljacobi, a=11",
    "builtin: ljacobi, a=11, c=12, x=1",
    "c=[1, 2]",
    "builtin ljacobi",
])
def test_parse_family_errors(text):
    with pytest.raises(SpecParseError):
        parse_family(text)


def test_parse_perturbations():
    perts = parse_perturbations("k=3,mu=-1/2,nu=2;k=4,mu=1/10")
    assert [(p.k, p.mu, p.nu) for p in perts] == [(3, Fraction(-1, 2), 2), (4, Fraction(1, 10), 1)]
    for bad in ("mu=1", "k=x,mu=1", "k=1,nu=0", "k=1,rho=2", ""):
        with pytest.raises(SpecParseError):
            parse_perturbations(bad)


def test_parse_chain_and_values():
    assert parse_chain("1/2, 1/4").d(7) == Fraction(1, 4)
    assert parse_chain("builtin: constant, d=1/4").d(3) == Fraction(1, 4)
    assert parse_chain("builtin: caratheodory, gamma=1").d(2) == Fraction(1, 6)
    assert parse_level_value("1, 1/2") == (1, Fraction(1, 2))
    assert parse_list("[1, 3/2]") == [1, Fraction(3, 2)]
    with pytest.raises(SpecParseError):
        parse_chain("builtin: eta, eta=-2")
    with pytest.raises(SpecParseError):
        parse_level_value("1")


# ---- 子命令 ---------------------------------------------------------------

def test_family_command(tmp_path):
    code, out = run(tmp_path, 'family', '--family', 'builtin: example1', '--n', '3', '--second-kind')
    assert code == EXIT_OK
    data = load(out)['data']
    assert data['P'][2] == ['3/4', '-9/4', '1']
    assert data['Q'][1] == ['1']


def test_perturb_command(tmp_path):
    code, out = run(tmp_path, 'perturb', '--family', LJACOBI, '--perturb', 'k=3,mu=-1/2,nu=2', '--n', '7')
    assert code == EXIT_OK
    report = load(out)
    assert report['summary']['ok']
    assert report['data']['P_direct'] == report['data']['P_represented']


def test_zeros_command_defaults_to_float(tmp_path):
    code, out = run(tmp_path, 'zeros', '--family', LJACOBI, '--perturb', 'k=3,mu=-2', '--n', '6')
    assert code == EXIT_OK
    series = load(out)['data']['series']
    assert series['P_n']['zeros'][0] == pytest.approx(1.049267646, abs=1e-6)
    assert series['P_n(mu,nu)']['zeros'][0] == pytest.approx(0.1082567303, abs=1e-6)


def test_zeros_command_rejects_plain_rational(tmp_path):
    code, _ = run(tmp_path, '--mode', 'rational', 'zeros', '--family', LJACOBI)
    assert code == EXIT_USAGE
    code, _ = run(tmp_path, '--mode', 'rational', '--allow-rational', 'zeros', '--family', LJACOBI)
    assert code == EXIT_OK


def test_interlace_command(tmp_path):
    code, out = run(tmp_path, 'interlace', '--family', 'builtin: positive1', '--perturb', 'k=2,mu=1/2')
    assert code == EXIT_OK
    assert load(out)['data']['interlacing']['pattern'] == 'A-starts'
    code, _ = run(tmp_path, 'interlace', '--family', 'builtin: positive1', '--perturb', 'k=2,mu=1;k=3,mu=1')
    assert code == EXIT_USAGE


def test_stieltjes_command_is_deterministic(tmp_path):
    argv = ['--seed', '7', 'stieltjes', '--family', 'builtin: example1', '--perturb', 'k=1,mu=1/2,nu=3',
            '--z', '7', '--depth', '3']
    code, first = run(tmp_path, *argv, name='a.json')
    assert code == EXIT_OK
    code, second = run(tmp_path, *argv, name='b.json')
    assert first.read_bytes() == second.read_bytes()
    assert load(first)['summary']['checks'] == 4 * 3 * 3


def test_toda_command(tmp_path):
    code, out = run(tmp_path, 'toda', '--sched', '1,1/3,2', '--integrate', '1/20,200')
    assert code == EXIT_OK
    report = load(out)
    assert report['data']['trajectory'][0]['t'] == pytest.approx(0.1)


def test_toda_command_weighted_measure(tmp_path):
    measure = "nodes=[1, 3/2, 2, 5/2, 3, 7/2], weights=[1, 1/2, 2, 1, 3/2, 1]"
    code, out = run(tmp_path, 'toda', '--measure', measure, '--N', '3', '--sched', '1,1/3,2')
    assert code == EXIT_OK
    report = load(out)
    assert report['data']['measure']['weights'] == ['1', '1/2', '2', '1', '3/2', '1']
    assert 'N=3' in report['summary']['title']


def test_toda_command_measure_file(tmp_path):
    path = tmp_path / 'measure.yaml'
    path.write_text("nodes: ['1', '3/2', '2', '5/2', '3', '7/2']\nweights: [2, 1, 1, 1, 1, 2]\n",
                    encoding='utf-8')
    code, out = run(tmp_path, 'toda', '--measure-file', str(path), '--N', '2')
    assert code == EXIT_OK
    assert load(out)['data']['measure']['weights'] == ['2', '1', '1', '1', '1', '2']


def test_toda_command_usage_errors(tmp_path):
    assert run(tmp_path, 'toda', '--N', '6')[0] == EXIT_USAGE
    assert run(tmp_path, 'toda', '--sched', '1,1/3,0')[0] == EXIT_USAGE
    assert run(tmp_path, 'toda', '--measure', 'nodes=[1, 2], weights=[1]')[0] == EXIT_USAGE
    assert run(tmp_path, 'toda', '--integrate', '1/20,x')[0] == EXIT_USAGE


def test_chain_command(tmp_path):
    code, out = run(tmp_path, 'chain', '--d', '1/2, 1/4', '--perturb-nu', '1,1/2', '--szego', '4', '--n', '6')
    assert code == EXIT_OK
    data = load(out)['data']
    assert data['parameters']['minimal'] == ['0', '1/4', '1/3', '3/8', '2/5', '5/12', '3/7']
    assert data['szego']['verblunsky'] == ['1/2', '1/3', '1/4', '1/5']
    assert data['palindromic_omega'][0] is None


def test_chain_command_complement(tmp_path):
    code, out = run(tmp_path, 'chain', '--d', 'builtin: eta, eta=0', '--complement', '--szego', '3', '--n', '5')
    assert code == EXIT_OK
    data = load(out)['data']
    assert data['parameters']['d'] == ['1/2', '1/4', '1/4', '1/4', '1/4']
    assert data['szego']['phi'][3] == ['0', '0', '0', '1']


def test_chain_command_delta(tmp_path):
    code, out = run(tmp_path, 'chain', '--d', 'builtin: caratheodory, gamma=2', '--delta0', '-1/3',
                    '--szego', '3', '--n', '4')
    assert code == EXIT_OK
    data = load(out)['data']
    assert data['delta']['delta'] == ['-1/3', '-1/4', '-1/5', '-1/6']


def test_table_command_csv(tmp_path):
    code, out = run(tmp_path, '--format', 'csv', 'table', 'T1', name='T1.csv')
    assert code == EXIT_OK
    lines = out.read_text(encoding='utf-8').splitlines()
    assert lines[0] == 'series,x'
    assert len(lines) == 1 + 12


def test_table_failure_exit_code(tmp_path):
    code, _ = run(tmp_path, '--tol', '1e-15', 'table', 'T1')
    assert code == EXIT_FAILED


def test_usage_errors(tmp_path):
    assert run(tmp_path, 'table', 'T9')[0] == EXIT_USAGE
    assert run(tmp_path, 'family', '--family', 'builtin: nosuch')[0] == EXIT_USAGE
    assert run(tmp_path, 'suite', 'nosuch')[0] == EXIT_USAGE


def test_library_error_exit_code(tmp_path):
    # P_n(0) 处的 c_0 极点
    assert run(tmp_path, 'family', '--family', 'builtin: ljacobi, a=3, c=12')[0] == EXIT_FAILED


def test_representation_suite(tmp_path):
    code, out = run(tmp_path, 'suite', 'representation')
    assert code == EXIT_OK
    assert load(out)['summary']['failed'] == 0


def test_stieltjes_suite_covers_every_depth():
    report = run_suite('stieltjes')
    assert report.passed
    names = report.history['name']
    ljacobi = [n for n in names if n.startswith('tail law ljacobi(a=11, c=12) k=1,')]
    # 可用阶数 9 → k=1 时 m = 1..7
    assert {n.rsplit(' m=', 1)[1] for n in ljacobi} == {str(m) for m in range(1, 8)}
    assert not any(n.startswith('tail law ljacobi(a=11, c=12) k=1,') and n.endswith(' m=8') for n in names)
    example = [n for n in names if n.startswith('full law example1() k=1,')]
    assert {n.rsplit(' m=', 1)[1] for n in example} == {str(m) for m in range(1, 9)}


def test_parse_toda_arguments():
    measure = parse_measure("nodes=[1, 2, 3], weights=[1, 1/2, 2]")
    assert measure.weights == (1, Fraction(1, 2), 2)
    assert parse_measure("nodes=[1, 2]").weights == (1, 1)
    assert parse_schedule("1,1/3,2") == (1, Fraction(1, 3), 2)
    assert parse_schedule("2,-1/2") == (2, Fraction(-1, 2), 1)
    assert parse_integrate("1/20,200") == (Fraction(1, 20), 200)
    assert parse_integrate("1/5") == (Fraction(1, 5), 2000)
    for bad in ("weights=[1]", "nodes=[1, 1]", "nodes=[-1, 2]", "nodes=[1], rho=[2]"):
        with pytest.raises(SpecParseError):
            parse_measure(bad)
    for bad in ("1", "x,1", "-1,1", "1,1,0", "1,2,3,4"):
        with pytest.raises(SpecParseError):
            parse_schedule(bad)
    for bad in ("0", "1/20,0", "1/20,2.5", "1,2,3"):
        with pytest.raises(SpecParseError):
            parse_integrate(bad)


def test_poly_tolerance_from_config():
    config = load_config()
    config['numeric']['poly_equal_tol'] = 1e-6
    assert _poly_tol(RATIONAL, config) is None
    assert _poly_tol(FLOAT, config) == 1e-6


def test_perturb_command_float_mode(tmp_path):
    config = tmp_path / 'ri.yaml'
    config.write_text("numeric:\n  poly_equal_tol: 1.0e-6\n", encoding='utf-8')
    code, out = run(tmp_path, '--config', str(config), '--mode', 'float', 'perturb',
                    '--family', LJACOBI, '--perturb', 'k=3,mu=-1/2,nu=2', '--n', '7')
    assert code == EXIT_OK
    assert load(out)['summary']['ok']


if __name__ == '__main__':
    ap = argparse.ArgumentParser()
    ap.add_argument('-k', default='', help='只运行名称包含该字符串的测试')
    args = ap.parse_args()
    sys.exit(pytest.main([__file__, '-q'] + (['-k', args.k] if args.k else [])))
