"""
核心模块

- errors:         异常树 (RIError)
- scalar:         rational / float 两种数值模式
- polynomial:     稠密多项式
- homography:     多项式系数的分式线性变换
- sequences:      系数序列与内置族
- recurrence:     族生成、转移矩阵、Casoratti 行列式
- hypergeometric: 有限项超几何和
"""

__version__ = '0.2.0'

from src.core.errors import RIError
from src.core.scalar import RATIONAL, FLOAT, to_scalar
from src.core.polynomial import Polynomial
from src.core.homography import Homography
from src.core.sequences import (
    CoefficientSequences,
    check_positive_L,
    example1,
    positive1,
    explicit,
    hyper2,
    eta_family_seqs,
)
from src.core.recurrence import (
    TransferMatrix,
    generate_family,
    generate_second_kind,
    evaluate,
    transfer_step,
    cumulative_transfer,
    casoratti,
    lambda_w_product,
    casoratti_identity_residual,
)
from src.core.hypergeometric import pochhammer, terminating_2f1
