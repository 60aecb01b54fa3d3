"""
报告序列化

JSON 输出 sort_keys、indent=2，同样的输入得到逐字节相同的文件。
Fraction 写成 "p/q"（整数写成 "n"），浮点数写成 repr。
"""

import csv
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional

import mpmath
import numpy as np

from src.core.polynomial import Polynomial


def scalar_to_str(value) -> str:
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, complex):
        return repr(value)
    return repr(float(value))


def poly_to_json(p: Polynomial) -> List[str]:
    """升幂系数"""
    return [scalar_to_str(c) for c in p.coeffs]


def to_jsonable(obj):
    """递归转换为 json 可写的结构"""
    if isinstance(obj, Polynomial):
        return poly_to_json(obj)
    if isinstance(obj, (Fraction, complex)):
        return scalar_to_str(obj)
    if isinstance(obj, mpmath.mpf):
        return float(obj)
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if hasattr(obj, 'to_json'):
        return to_jsonable(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def dumps(data) -> str:
    return json.dumps(to_jsonable(data), indent=2, sort_keys=True, ensure_ascii=False) + '\n'


def write_json(data, path: Optional[str] = None):
    """path 为 None 时写到 stdout"""
    text = dumps(data)
    if path is None:
        sys.stdout.write(text)
        return
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)


def write_csv(rows: Iterable[dict], path: Optional[str] = None, columns: List[str] = None):
    """rows 为字典列表；columns 缺省取第一行的键顺序"""
    rows = [to_jsonable(r) for r in rows]
    if columns is None:
        columns = list(rows[0].keys()) if rows else []
    if path is None:
        writer = csv.DictWriter(sys.stdout, fieldnames=columns, lineterminator='\n')
        writer.writeheader()
        writer.writerows(rows)
        return
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.DictWriter(f, fieldnames=columns, lineterminator='\n')
        writer.writeheader()
        writer.writerows(rows)


def zero_rows(series: dict) -> List[dict]:
    """{名称: ZeroSet} → [{'series', 'x'}]，用作图数据"""
    return [{'series': name, 'x': x} for name, zs in series.items() for x in zs.zeros]
