"""
扰动模块

- perturbation:   Perturbation、apply_perturbation、S_k / Ŝ_k、直接递推基准
- representation: 扰动族的相伴族表示与约定校准、常系数族闭式
- transfer:       转移矩阵 M_k 及其恒等式
"""

__version__ = '0.2.0'

from src.perturbation.perturbation import (
    Perturbation,
    as_list,
    apply_perturbation,
    apply_perturbations,
    s_polynomials,
    perturbed_family_direct,
    perturbed_second_kind_direct,
)
from src.perturbation.representation import (
    ShiftConvention,
    calibrate_convention,
    calibrate_shift,
    perturbed_family_represented,
    perturbed_second_kind_represented,
    example1_closed_form,
    example1_corecursive_closed_form,
)
from src.perturbation.transfer import (
    transfer_matrix_Mk,
    expected_det_Mk,
    transfer_identity_residual,
)
