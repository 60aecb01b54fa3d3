"""
R_I 型正交多项式扰动工具包

co-recursive / co-dilated / co-modified 扰动下的族生成、零点、
Stieltjes 函数、相对论 Toda 流与链序列
"""

__version__ = '0.2.0'
