"""
链序列模块

- chain:      正链序列、最小/最大参数、SPPCS 判定、补链、co-dilation、η 族
- verblunsky: δ 递推、扰动 δ、Carathéodory 族
- szego:      r_n 多项式、Szegő 多项式（由链序列或由 δ 序列）、回文检测
"""

__version__ = '0.2.0'

from src.chainseq.chain import (
    ChainSequence,
    MaximalParameters,
    SppcsVerdict,
    EtaFamilyInfo,
    from_list,
    constant,
    as_chain,
    minimal_parameters,
    backward_parameters,
    adaptive_maximal,
    maximal_parameters,
    raabe_index,
    sppcs_verdict,
    is_sppcs,
    complementary,
    complementary_closed_form,
    codilated,
    eta_d,
    eta_minimal,
    eta_maximal,
    eta_family,
    parameter_table,
)
from src.chainseq.verblunsky import (
    VerblunskySeq,
    delta_from_chain,
    delta_condition_holds,
    delta_condition_residual,
    chain_from_delta_residual,
    perturbed_delta,
    perturbed_delta_direct,
    gamma_from_sigma,
    caratheodory_delta,
    caratheodory_chain,
)
from src.chainseq.szego import (
    SzegoFamily,
    r_polynomials,
    szego_from_chain,
    szego_from_delta,
    reversal_holds,
    palindromic_omega,
    palindromic_omegas,
)
