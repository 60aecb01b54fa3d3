"""
Stieltjes 函数模块

- fraction:   连分式、Wallis 递推、R_I-fraction 与尾部连分式
- homography: 扰动前后 Stieltjes 函数之间的分式线性变换
"""

__version__ = '0.2.0'

from src.core.homography import Homography
from src.stieltjes.fraction import (
    ContinuedFraction,
    wallis,
    convergent,
    ri_fraction,
    tail_fraction,
    first_vanishing_denominator,
    screen_point,
    large_z_trend,
)
from src.stieltjes.homography import (
    CORRECTION_SIGN,
    homography_from_tail,
    homography_from_full,
    cofactor_transform,
    tail_from_full,
    tail_law_residual,
    full_law_residual,
    tail_from_full_residual,
    calibrate_full_sign,
    composition_consistent,
    cofactor_consistent,
)
