"""
族与扰动的文本描述

族:
    builtin: example1
    builtin: positive1
    builtin: ljacobi, a=11, c=12
    builtin: hyper2, b=2, c=4
    builtin: eta, eta=1, t=0
    c=[1, 2, 3], lambda=[1/4, 1/4], a=[0, 0]

扰动:
    k=3,mu=-1/2,nu=2;k=4,mu=1/10

链序列:
    1/2, 1/4                         (末项常值延拓)
    [1/2, 1/4, 1/6]
    builtin: constant, d=1/4
    builtin: eta, eta=0, t=0
    builtin: caratheodory, gamma=1

Toda 测度与扰动:
    nodes=[1, 3/2, 2], weights=[1, 1/2, 2]
    1,1/3,2                          (k,mu,nu)
    1/20,2000                        (T,steps)
"""

import re
from fractions import Fraction
from typing import Dict, List, Tuple

from src.chainseq.chain import ChainSequence, constant, eta_family, from_list
from src.chainseq.verblunsky import caratheodory_chain
from src.core.errors import RIError, SpecParseError
from src.core.scalar import RATIONAL, check_mode, to_scalar
from src.core.sequences import (
    CoefficientSequences,
    eta_family_seqs,
    example1,
    explicit,
    hyper2,
    positive1,
)
from src.perturbation.perturbation import Perturbation
from src.toda.moments import DiscreteMeasure
from src.zeros.ljacobi import ljacobi_seqs

_FIELD = re.compile(r'\s*(\w+)\s*=\s*(\[[^\]]*\]|[^,\[\]]+)\s*(?:,|$)')


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise SpecParseError(f"无法解析数值: {text!r}")


def parse_list(text: str) -> List[Fraction]:
    body = text.strip()
    if body.startswith('[') and body.endswith(']'):
        body = body[1:-1]
    items = [s for s in body.split(',') if s.strip()]
    if not items:
        raise SpecParseError(f"空列表: {text!r}")
    return [parse_rational(s) for s in items]


def parse_fields(text: str) -> Dict[str, str]:
    """'a=1, b=[1,2]' → {'a': '1', 'b': '[1,2]'}"""
    fields, pos = {}, 0
    text = text.strip()
    while pos < len(text):
        m = _FIELD.match(text, pos)
        if m is None:
            raise SpecParseError(f"无法解析字段: {text[pos:]!r}")
        key = m.group(1)
        if key in fields:
            raise SpecParseError(f"字段 {key} 重复")
        fields[key] = m.group(2).strip()
        pos = m.end()
    return fields


def _split_builtin(text: str) -> Tuple[str, Dict[str, str]]:
    body = text.split(':', 1)[1].strip()
    name, _, rest = body.partition(',')
    return name.strip(), parse_fields(rest)


def _require(fields: Dict[str, str], names: Tuple[str, ...], what: str) -> List[Fraction]:
    extra = set(fields) - set(names)
    if extra:
        raise SpecParseError(f"{what}: 未知字段 {sorted(extra)}")
    missing = [n for n in names if n not in fields]
    if missing:
        raise SpecParseError(f"{what}: 缺少字段 {missing}")
    return [parse_rational(fields[n]) for n in names]


def parse_family(text: str, mode: str = RATIONAL) -> CoefficientSequences:
    """族描述 → CoefficientSequences"""
    check_mode(mode)
    text = text.strip()
    try:
        if text.startswith('builtin'):
            if ':' not in text:
                raise SpecParseError(f"builtin 后需要冒号: {text!r}")
            name, fields = _split_builtin(text)
            if name == 'example1':
                _require(fields, (), name)
                return example1(mode)
            if name == 'positive1':
                _require(fields, (), name)
                return positive1(mode)
            if name == 'ljacobi':
                a, c = _require(fields, ('a', 'c'), name)
                return ljacobi_seqs(a, c, mode=mode)
            if name == 'hyper2':
                b, c = _require(fields, ('b', 'c'), name)
                return hyper2(b, c, mode)
            if name == 'eta':
                fields.setdefault('t', '0')
                eta, _ = _require(fields, ('eta', 't'), name)
                return eta_family_seqs(eta, mode)
            raise SpecParseError(f"未知内置族: {name!r}")
        fields = parse_fields(text)
        if 'c' not in fields or 'lambda' not in fields:
            raise SpecParseError(f"显式族需要 c=[...] 与 lambda=[...]: {text!r}")
        extra = set(fields) - {'c', 'lambda', 'a'}
        if extra:
            raise SpecParseError(f"显式族: 未知字段 {sorted(extra)}")
        a = parse_list(fields['a']) if 'a' in fields else None
        return explicit(parse_list(fields['c']), parse_list(fields['lambda']), a, mode)
    except SpecParseError:
        raise
    except RIError as e:
        raise SpecParseError(f"{text!r}: {e}") from e


def parse_perturbations(text: str, mode: str = RATIONAL) -> List[Perturbation]:
    """'k=3,mu=-1/2,nu=2;k=4,mu=1/10' → [Perturbation, ...]"""
    perts = []
    for part in (p for p in text.split(';') if p.strip()):
        fields = parse_fields(part)
        extra = set(fields) - {'k', 'mu', 'nu'}
        if extra:
            raise SpecParseError(f"扰动: 未知字段 {sorted(extra)}")
        if 'k' not in fields:
            raise SpecParseError(f"扰动缺少 k: {part!r}")
        try:
            k = int(fields['k'])
        except ValueError:
            raise SpecParseError(f"k 必须是整数: {fields['k']!r}")
        mu = to_scalar(parse_rational(fields.get('mu', '0')), mode)
        nu = to_scalar(parse_rational(fields.get('nu', '1')), mode)
        try:
            perts.append(Perturbation(k, mu, nu))
        except RIError as e:
            raise SpecParseError(f"{part!r}: {e}") from e
    if not perts:
        raise SpecParseError("空的扰动描述")
    return perts


def parse_chain(text: str) -> ChainSequence:
    """链序列描述 → ChainSequence"""
    text = text.strip()
    try:
        if text.startswith('builtin'):
            if ':' not in text:
                raise SpecParseError(f"builtin 后需要冒号: {text!r}")
            name, fields = _split_builtin(text)
            if name == 'constant':
                (d,) = _require(fields, ('d',), name)
                return constant(d)
            if name == 'eta':
                fields.setdefault('t', '0')
                eta, t = _require(fields, ('eta', 't'), name)
                return eta_family(eta, t)[0]
            if name == 'caratheodory':
                (gamma,) = _require(fields, ('gamma',), name)
                return caratheodory_chain(gamma)
            raise SpecParseError(f"未知内置链序列: {name!r}")
        return from_list(parse_list(text))
    except SpecParseError:
        raise
    except RIError as e:
        raise SpecParseError(f"{text!r}: {e}") from e


def parse_level_value(text: str) -> Tuple[int, Fraction]:
    """'1,1/2' → (1, 1/2)"""
    parts = [s.strip() for s in text.split(',')]
    if len(parts) != 2:
        raise SpecParseError(f"需要 'k,value' 形式: {text!r}")
    try:
        level = int(parts[0])
    except ValueError:
        raise SpecParseError(f"层号必须是整数: {parts[0]!r}")
    return level, parse_rational(parts[1])


def parse_measure(text: str) -> DiscreteMeasure:
    """'nodes=[1, 2, 3], weights=[1, 1/2, 2]' → DiscreteMeasure（缺省单位权重）"""
    fields = parse_fields(text)
    extra = set(fields) - {'nodes', 'weights'}
    if extra:
        raise SpecParseError(f"测度: 未知字段 {sorted(extra)}")
    if 'nodes' not in fields:
        raise SpecParseError(f"测度缺少 nodes=[...]: {text!r}")
    nodes = parse_list(fields['nodes'])
    weights = parse_list(fields['weights']) if 'weights' in fields else [Fraction(1)] * len(nodes)
    try:
        return DiscreteMeasure(tuple(nodes), tuple(weights))
    except RIError as e:
        raise SpecParseError(f"{text!r}: {e}") from e


def measure_from_mapping(data: Dict) -> DiscreteMeasure:
    """YAML 中的 {nodes: [...], weights: [...]}"""
    if not isinstance(data, dict) or 'nodes' not in data:
        raise SpecParseError("测度文件需要 nodes 字段")
    nodes = [parse_rational(str(x)) for x in data['nodes']]
    weights = [parse_rational(str(w)) for w in data.get('weights', [1] * len(nodes))]
    try:
        return DiscreteMeasure(tuple(nodes), tuple(weights))
    except RIError as e:
        raise SpecParseError(f"测度文件: {e}") from e


def parse_schedule(text: str) -> Tuple[int, Fraction, Fraction]:
    """'k,mu,nu' 或 'k,mu' → (k, μ, ν)"""
    parts = [s.strip() for s in text.split(',')]
    if len(parts) not in (2, 3):
        raise SpecParseError(f"需要 'k,mu,nu' 形式: {text!r}")
    try:
        k = int(parts[0])
    except ValueError:
        raise SpecParseError(f"层号必须是整数: {parts[0]!r}")
    mu = parse_rational(parts[1])
    nu = parse_rational(parts[2]) if len(parts) == 3 else Fraction(1)
    if k < 0:
        raise SpecParseError(f"层号必须 >= 0: {k}")
    if nu <= 0:
        raise SpecParseError(f"ν 必须 > 0: {nu}")
    return k, mu, nu


def parse_integrate(text: str, default_steps: int = 2000) -> Tuple[Fraction, int]:
    """'T,steps' 或 'T' → (T, steps)"""
    parts = [s.strip() for s in text.split(',')]
    if len(parts) not in (1, 2):
        raise SpecParseError(f"需要 'T,steps' 形式: {text!r}")
    T = parse_rational(parts[0])
    if T <= 0:
        raise SpecParseError(f"积分时长必须 > 0: {T}")
    if len(parts) == 1:
        return T, default_steps
    try:
        steps = int(parts[1])
    except ValueError:
        raise SpecParseError(f"步数必须是整数: {parts[1]!r}")
    if steps < 1:
        raise SpecParseError(f"步数必须 >= 1: {steps}")
    return T, steps
