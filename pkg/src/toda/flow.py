"""
Toda 流的数值验证与积分

- verify_flow:    中心差分 vs 方程右端（未扰动 / 扰动重参数化）
- flow_order:     h 与 h/2 两次残差拟合收敛阶
- integrate_flow: 经典四阶 Runge-Kutta，积分闭合格点
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

import mpmath
import numpy as np

from src.core.errors import BlowUpError, DomainError
from src.core.scalar import Scalar
from src.toda.equations import PerturbationSchedule, toda_rhs, unhat
from src.toda.moments import (
    DEFAULT_DPS,
    CoefficientFrame,
    DiscreteMeasure,
    TodaParams,
    coeffs_from_moments,
    to_mpf,
)

DEFAULT_BLOWUP = 1e12
DEFAULT_FLOOR = 1e-12


@dataclass
class FlowReport:
    """每个 n 的 |差分 - 右端|"""
    h: float
    c_residuals: Dict[int, float] = field(default_factory=dict)
    lam_residuals: Dict[int, float] = field(default_factory=dict)

    @property
    def max_residual(self) -> float:
        values = list(self.c_residuals.values()) + list(self.lam_residuals.values())
        return max(values) if values else 0.0

    def to_json(self) -> dict:
        return {
            'h': self.h,
            'c': {str(n): r for n, r in sorted(self.c_residuals.items())},
            'lambda': {str(n): r for n, r in sorted(self.lam_residuals.items())},
            'max': self.max_residual,
        }


def _frame(measure, params, t, N, sched, dps):
    frame = coeffs_from_moments(measure, params.at(t), N, dps=dps)
    return unhat(frame, sched, t) if sched is not None else frame


def verify_flow(measure: DiscreteMeasure, params: TodaParams, sched: Optional[PerturbationSchedule],
                t0: Scalar, h: Scalar, N: int, dps: int = DEFAULT_DPS) -> FlowReport:
    """在 t0 处用中心差分检验 n = 1..N 的方程

    sched 不为 None 时，不带帽系数由矩泛函给出的带帽系数经 unhat 得到。
    """
    if N + 1 > measure.M:
        raise DomainError(f"需要 N+1 <= M（N={N}, M={measure.M}）")
    report = FlowReport(float(h))
    with mpmath.workdps(dps):
        t0, h = to_mpf(t0), to_mpf(h)
        params = TodaParams(to_mpf(params.p), to_mpf(params.q), t0)
        before = _frame(measure, params, t0 - h, N + 1, sched, dps)
        center = _frame(measure, params, t0, N + 1, sched, dps)
        after = _frame(measure, params, t0 + h, N + 1, sched, dps)
        for n in range(1, N + 1):
            c_dot, lam_dot = toda_rhs(center, params, sched, n)
            fd_c = (after.c[n] - before.c[n]) / (2 * h)
            report.c_residuals[n] = float(abs(fd_c - c_dot))
            if n >= 2:
                fd_l = (after.lam[n] - before.lam[n]) / (2 * h)
                report.lam_residuals[n] = float(abs(fd_l - lam_dot))
    return report


def flow_order(measure: DiscreteMeasure, params: TodaParams, sched: Optional[PerturbationSchedule],
               t0: Scalar, h: Scalar, N: int, levels=None) -> Dict[str, float]:
    """log2(r(h)/r(h/2))；levels 指定只看哪些 n"""
    coarse = verify_flow(measure, params, sched, t0, h, N)
    fine = verify_flow(measure, params, sched, t0, h / 2, N)

    def pick(rep: FlowReport) -> float:
        vals = [r for n, r in list(rep.c_residuals.items()) + list(rep.lam_residuals.items())
                if levels is None or n in levels]
        return max(vals)

    r_h, r_h2 = pick(coarse), pick(fine)
    return {'r_h': r_h, 'r_h2': r_h2, 'order': float(np.log2(r_h / r_h2))}


# ---- 积分 ---------------------------------------------------------------

@dataclass
class Trajectory:
    times: List[float]
    frames: List[CoefficientFrame]

    @property
    def final(self) -> CoefficientFrame:
        return self.frames[-1]

    def rows(self) -> List[dict]:
        out = []
        for t, fr in zip(self.times, self.frames):
            row = {'t': t}
            row.update({f'c_{n}': float(fr.c[n]) for n in range(1, fr.N + 1)})
            row.update({f'lambda_{n}': float(fr.lam[n]) for n in range(2, fr.N + 1)})
            out.append(row)
        return out


def _rhs_vector(state: np.ndarray, t: float, params: TodaParams,
                sched: Optional[PerturbationSchedule], closed: bool,
                blowup: float, floor: float) -> np.ndarray:
    frame = CoefficientFrame.from_state(state, t, closed)
    N = frame.N
    if np.any(np.abs(state) > blowup) or not np.all(np.isfinite(state)):
        raise BlowUpError(f"t={t}: 系数超过 {blowup}")
    denominators = list(frame.c[1:])
    if sched is not None and sched.level <= N:
        mu = sched.at(t)[0]
        denominators[sched.level - 1] = frame.c[sched.level] - mu
    if params.q != 0 and min(abs(d) for d in denominators) < floor:
        raise BlowUpError(f"t={t}: 分母小于 {floor}")
    dc, dl = [], []
    for n in range(1, N + 1):
        c_dot, lam_dot = toda_rhs(frame, params, sched, n)
        dc.append(c_dot)
        if n >= 2:
            dl.append(lam_dot)
    return np.array(dc + dl, dtype=float)


def integrate_flow(initial: CoefficientFrame, params: TodaParams, sched: Optional[PerturbationSchedule],
                   T: float, steps: int, sample_every: int = None,
                   blowup: float = DEFAULT_BLOWUP, floor: float = DEFAULT_FLOOR) -> Trajectory:
    """经典 RK4 积分 [t_0, t_0 + T]；需要闭合帧（N 等于测度节点数）"""
    if steps < 1:
        raise DomainError(f"steps={steps} 必须 >= 1")
    if not initial.closed:
        raise DomainError("积分需要闭合帧（由 coeffs_from_moments(N=M) 得到）")
    params = TodaParams(float(params.p), float(params.q), float(params.t))
    sample_every = sample_every or steps
    dt = float(T) / steps
    t = float(initial.t)
    y = initial.state()
    f = lambda yy, tt: _rhs_vector(yy, tt, params, sched, True, blowup, floor)

    times, frames = [t], [CoefficientFrame.from_state(y, t, True)]
    for step in range(1, steps + 1):
        k1 = f(y, t)
        k2 = f(y + dt / 2 * k1, t + dt / 2)
        k3 = f(y + dt / 2 * k2, t + dt / 2)
        k4 = f(y + dt * k3, t + dt)
        y = y + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        t = float(initial.t) + step * dt
        if step % sample_every == 0 or step == steps:
            times.append(t)
            frames.append(CoefficientFrame.from_state(y, t, True))
    return Trajectory(times, frames)
