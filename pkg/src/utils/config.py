"""
配置加载

config/ri_config.yaml 深度合并到内置默认值上；
环境变量 RI_COPOLY_PRECISION 覆盖 numeric.float_tol。
"""

import copy
import os
from pathlib import Path
from typing import Dict, Optional

import yaml

from src.core.errors import DomainError

PROJECT_ROOT = Path(__file__).parent.parent.parent
DEFAULT_CONFIG_PATH = PROJECT_ROOT / 'config' / 'ri_config.yaml'
PRECISION_ENV = 'RI_COPOLY_PRECISION'

DEFAULTS: Dict = {
    'numeric': {
        'mode': 'rational',
        'float_tol': 1e-10,
        'poly_equal_tol': 1e-9,
    },
    'zeros': {
        'newton_max_iter': 20,
        'residual_tol': 1e-10,
        'common_tol': 1e-7,
        'imag_tol': 1e-6,
    },
    'stieltjes': {
        'screen_retries': 5,
        'sample_points': ['7', '11/3', '-5/2'],
        'max_depth': 8,
    },
    'toda': {
        'pivot_tol': 1e-12,
        'mp_dps': 40,
        'blowup': 1e12,
        'denominator_floor': 1e-12,
        'measure': {
            'nodes': ['1', '3/2', '2', '5/2', '3', '7/2'],
            'weights': [1, 1, 1, 1, 1, 1],
        },
        'p': 1,
        'q': 1,
        't0': '1/10',
        'h': 1e-3,
    },
    'chain': {
        'tail_depth': 1000,
        'depth_tol': 1e-8,
        'max_depth': 64000,
        'sppcs_tol': 1e-6,
        'raabe_depth': 100000,
    },
    'tables': {
        'golden_file': 'config/golden_tables.yaml',
        'golden_tol': 1e-6,
    },
}


def deep_merge(base: Dict, override: Dict) -> Dict:
    """返回新字典；override 中的嵌套字典逐层覆盖 base"""
    out = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(out.get(key), dict):
            out[key] = deep_merge(out[key], value)
        else:
            out[key] = copy.deepcopy(value)
    return out


def load_yaml(path) -> Dict:
    with open(path, 'r', encoding='utf-8') as f:
        return yaml.safe_load(f) or {}


def load_config(path: Optional[str] = None) -> Dict:
    """读取配置

    Args:
        path: YAML 路径；None 时使用 config/ri_config.yaml（不存在则只用默认值）

    Returns:
        合并后的配置字典
    """
    if path is not None:
        if not Path(path).exists():
            raise DomainError(f"配置文件不存在: {path}")
        config = deep_merge(DEFAULTS, load_yaml(path))
    elif DEFAULT_CONFIG_PATH.exists():
        config = deep_merge(DEFAULTS, load_yaml(DEFAULT_CONFIG_PATH))
    else:
        config = copy.deepcopy(DEFAULTS)

    env = os.environ.get(PRECISION_ENV)
    if env:
        try:
            config['numeric']['float_tol'] = float(env)
        except ValueError:
            raise DomainError(f"{PRECISION_ENV}={env!r} 不是合法的浮点数")
    return config


def resolve_path(relative: str) -> Path:
    """相对项目根目录的路径"""
    path = Path(relative)
    return path if path.is_absolute() else PROJECT_ROOT / path
