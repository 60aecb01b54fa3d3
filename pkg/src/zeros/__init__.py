"""
零点模块

- roots:       伴随矩阵 + Newton 的实零点求解
- interlacing: 交错模式、零点引理、公共零点、符号见证、单调性扫描
- ljacobi:     L-Jacobi 族与超几何表示
"""

__version__ = '0.2.0'

from src.zeros.roots import ZeroSet, real_zeros
from src.zeros.interlacing import (
    InterlacingReport,
    MonotonicityScan,
    interlacing_report,
    expected_pattern,
    consecutive_interlacing,
    zero_lemma_check,
    common_zero_check,
    calibrate_witness_index,
    sign_witness_corecursive,
    monotonicity_scan,
)
from src.zeros.ljacobi import (
    ljacobi_positive,
    ljacobi_seqs,
    hypergeometric_oracle,
    hyper2_oracle,
)
