#!/usr/bin/env python3
"""
扰动层诊断脚本

零点表的表注下标与递推下标可能差 1。对每张表的每个扰动列，
逐个尝试 {标注-1, 标注, 标注+1}，打印与基准值的最大偏差，
并指出 config/golden_tables.yaml 中记录的层是否仍是最优解。
"""

import sys
import argparse
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.errors import RIError
from src.utils.config import load_config
from src.cli.tables import (
    LEVEL_SHIFTS,
    TABLE_IDS,
    _column_perts,
    _zeros,
    deviation,
    load_golden,
    resolve_levels,
    table_family,
)


def print_header(text):
    print(f"\n{'='*60}")
    print(f"  {text}")
    print(f"{'='*60}\n")


def scan_table(table_id: str, golden: dict, tol: float) -> bool:
    """打印每个候选层的偏差；返回记录的层是否与搜索结果一致"""
    entry = golden[table_id]
    print_header(f"{table_id}: {entry['title']}")
    seqs = table_family(entry)
    n = entry['n']
    print(f"族: {seqs.describe()}，n = {n}")

    consistent = True
    for j, column in enumerate(entry['columns']):
        if not column['perturbations']:
            print(f"  列{j}: 未扰动 P_{n}，偏差 {deviation(_zeros(seqs, [], n, 'P_n'), column['zeros']):.3e}")
            continue
        labels = column.get('levels_label') or column.get('levels')
        print(f"  列{j}: 标注层 {labels}")
        for shift in LEVEL_SHIFTS:
            levels = [k + shift for k in labels]
            if min(levels) < 0:
                continue
            try:
                dev = deviation(_zeros(seqs, _column_perts(column, levels), n, ''), column['zeros'])
                mark = '✅' if dev <= tol else '  '
                print(f"    {mark} 层 {levels}: 偏差 {dev:.3e}")
            except RIError as e:
                print(f"    ❌ 层 {levels}: {type(e).__name__}: {e}")

        resolved, _, dev = resolve_levels(seqs, column, n, tol)
        recorded = column.get('levels')
        if resolved is None:
            print(f"    ⚠️ 没有候选层在 {tol} 内复现基准值（最小偏差 {dev:.3e}）")
            consistent = False
        elif recorded is not None and list(recorded) != resolved:
            print(f"    ⚠️ 记录层 {recorded} 与搜索结果 {resolved} 不一致")
            consistent = False
        else:
            print(f"    → 采用层 {resolved}")
    return consistent


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument('tables', nargs='*', default=list(TABLE_IDS))
    ap.add_argument('--tol', type=float, default=None)
    args = ap.parse_args()

    config = load_config()
    tol = args.tol or config['tables']['golden_tol']
    golden = load_golden(config)

    results = {tid: scan_table(tid, golden, tol) for tid in args.tables}

    print_header("汇总")
    for tid, ok in results.items():
        print(f"{tid:.<40} {'✅ 一致' if ok else '⚠️ 需要检查'}")
    return 0 if all(results.values()) else 1


if __name__ == '__main__':
    sys.exit(main())
