"""
Toda 模块

- moments:   离散测度、含时矩泛函、由矩恢复 L-正交多项式系数
- equations: 扩展相对论 Toda 方程右端（含单层扰动）
- flow:      差分验证、收敛阶拟合与 RK4 积分
"""

__version__ = '0.2.0'

from src.toda.moments import (
    DiscreteMeasure,
    TodaParams,
    CoefficientFrame,
    default_measure,
    moment,
    coeffs_from_moments,
    recurrence_residual,
    sigma_residuals,
    a_n0_residual,
)
from src.toda.equations import (
    PerturbationSchedule,
    toda_rhs,
    affected_levels,
    unhat,
)
from src.toda.flow import (
    FlowReport,
    Trajectory,
    verify_flow,
    flow_order,
    integrate_flow,
)
