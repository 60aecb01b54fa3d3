"""
命令行模块

- specs:   族 / 扰动 / 链序列描述的解析
- tables:  零点表复现（基准值见 config/golden_tables.yaml）
- suites:  各模块的恒等式套件
- harness: argparse 入口（python -m src.cli.harness）
"""

__version__ = '0.2.0'

from src.cli.specs import (
    parse_rational,
    parse_list,
    parse_family,
    parse_perturbations,
    parse_chain,
    parse_level_value,
)
from src.cli.tables import TABLE_IDS, run_table, resolve_levels
from src.cli.suites import SUITE_NAMES, run_suite
