"""
工具模块

- config: YAML 配置加载（RI_COPOLY_PRECISION 覆盖浮点容差）
- report: 检查结果收集与控制台摘要
- io:     JSON / CSV 输出
"""

__version__ = '0.2.0'

from src.utils.config import load_config, deep_merge, resolve_path
from src.utils.report import CheckReport
from src.utils.io import write_json, write_csv, scalar_to_str, poly_to_json
