"""
零点表复现

基准值存放在 config/golden_tables.yaml。表注中的扰动下标与递推下标之间可能差 1，
因此每个扰动列在 {标注-1, 标注, 标注+1} 中搜索与基准值吻合的扰动层，
并与 YAML 中记录的已校准层比对。
"""

from typing import Dict, List, Optional, Sequence, Tuple

from src.core.errors import RIError, UsageError
from src.core.recurrence import generate_family
from src.core.sequences import CoefficientSequences
from src.perturbation.perturbation import Perturbation, perturbed_family_direct
from src.utils.config import load_config, load_yaml, resolve_path
from src.utils.report import CheckReport
from src.zeros.interlacing import interlacing_report, monotonicity_scan
from src.zeros.roots import ZeroSet, real_zeros
from src.cli.specs import parse_family, parse_rational

TABLE_IDS = ('T1', 'T2', 'T3', 'T4', 'T5')
LEVEL_SHIFTS = (0, -1, 1)


def load_golden(config: Dict = None) -> Dict:
    config = config or load_config()
    return load_yaml(resolve_path(config['tables']['golden_file']))


def table_family(entry: Dict) -> CoefficientSequences:
    """表的基础族（含系数覆盖）"""
    seqs = parse_family(entry['family'])
    override = entry.get('override') or {}
    if override:
        c = {int(n): parse_rational(str(v)) for n, v in (override.get('c') or {}).items()}
        lam = {int(n): parse_rational(str(v)) for n, v in (override.get('lambda') or {}).items()}
        seqs = seqs.modified(c=c, lam=lam, name=seqs.name + '*')
    return seqs


def _column_perts(column: Dict, levels: Sequence[int]) -> List[Perturbation]:
    return [Perturbation(k, parse_rational(str(p.get('mu', '0'))), parse_rational(str(p.get('nu', '1'))))
            for k, p in zip(levels, column['perturbations'])]


def _zeros(seqs: CoefficientSequences, perts: List[Perturbation], n: int, label: str) -> ZeroSet:
    P = perturbed_family_direct(seqs, perts, n)[n] if perts else generate_family(seqs, n)[n]
    return real_zeros(P, label=label)


def deviation(computed: ZeroSet, golden: Sequence[float]) -> float:
    if len(computed) != len(golden):
        return float('inf')
    return max(abs(x - float(g)) for x, g in zip(computed.zeros, golden))


def resolve_levels(seqs: CoefficientSequences, column: Dict, n: int,
                   tol: float) -> Tuple[Optional[List[int]], ZeroSet, float]:
    """在标注层附近搜索复现基准值的扰动层；找不到时返回 (None, 最接近的零点, 偏差)"""
    labels = column.get('levels_label') or column.get('levels')
    best: Tuple[Optional[List[int]], Optional[ZeroSet], float] = (None, None, float('inf'))
    for shift in LEVEL_SHIFTS:
        levels = [k + shift for k in labels]
        if min(levels) < 0:
            continue
        try:
            zs = _zeros(seqs, _column_perts(column, levels), n, f'k={levels}')
        except RIError:
            continue
        dev = deviation(zs, column['zeros'])
        if dev < best[2]:
            best = (levels, zs, dev)
    levels, zs, dev = best
    if zs is None:
        raise UsageError(f"标注层 {labels} 附近没有可求解的扰动层")
    return (levels if dev <= tol else None), zs, dev


def run_table(table_id: str, config: Dict = None) -> CheckReport:
    """重新计算一张表并与基准值比较

    Args:
        table_id: T1..T5
        config: 配置字典（None 时读取默认配置）

    Returns:
        CheckReport；data 中含各列零点与解析出的扰动层
    """
    if table_id not in TABLE_IDS:
        raise UsageError(f"未知表号 {table_id!r}（可选 {', '.join(TABLE_IDS)}）")
    config = config or load_config()
    tol = config['tables']['golden_tol']
    entry = load_golden(config)[table_id]
    seqs = table_family(entry)
    n = entry['n']

    report = CheckReport(f"{table_id}: {entry['title']}", {'default': tol})
    columns: List[ZeroSet] = []
    resolved: List[Optional[List[int]]] = []
    for j, column in enumerate(entry['columns']):
        if not column['perturbations']:
            zs = _zeros(seqs, [], n, 'P_n')
            report.add(f'column{j}: zeros', deviation(zs, column['zeros']))
            columns.append(zs)
            resolved.append([])
            continue
        levels, zs, dev = resolve_levels(seqs, column, n, tol)
        report.add(f'column{j}: zeros', dev, detail={'levels': levels})
        if 'levels' in column:
            report.add_bool(f'column{j}: levels', levels == list(column['levels']),
                            detail={'resolved': levels, 'recorded': column['levels']})
        columns.append(zs)
        resolved.append(levels)

    if 'pattern' in entry:
        inter = interlacing_report(columns[0], columns[1], config['zeros']['common_tol'])
        report.add_bool('interlacing', inter.pattern == entry['pattern'],
                        detail={'pattern': inter.pattern, 'expected': entry['pattern']})
        report.data['interlacing'] = inter.to_json()
        if 'common' in entry:
            report.add_bool('common zeros', len(inter.common) == entry['common'],
                            detail={'common': list(inter.common)})

    if 'monotone' in entry and resolved[1]:
        pairs = [tuple(parse_rational(str(p.get('mu', '0'))) for p in col['perturbations'])
                 for col in entry['columns'][1:]]
        scan = monotonicity_scan(seqs, resolved[1][0], pairs, n)
        report.add_bool('monotonicity', scan.monotone and scan.direction == entry['monotone'],
                        detail={'direction': scan.direction, 'failures': scan.failures})

    report.data['table'] = table_id
    report.data['levels'] = resolved
    report.data['series'] = {f'column{j}': z for j, z in enumerate(columns)}
    report.data['zeros'] = [list(z.zeros) for z in columns]
    return report
