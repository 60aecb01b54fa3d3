"""
检查结果收集

把各项恒等式/性质检查的残差累积起来，统一给出通过与否、
控制台摘要和 JSON 报告
"""

import sys
from typing import Dict, List, Optional


class CheckReport:
    """检查结果收集器"""

    def __init__(self, title: str, thresholds: Dict[str, float] = None):
        """初始化

        Args:
            title: 报告标题（表号、套件名等）
            thresholds: 默认阈值，键为检查名前缀，'default' 为兜底
        """
        self.title = title
        self.history = {
            'name': [],
            'residual': [],
            'threshold': [],
            'passed': [],
            'detail': [],
        }

        # 残差阈值
        self.thresholds = {
            'default': 0.0,        # 精确恒等式
        }
        self.thresholds.update(thresholds or {})
        self.data: Dict[str, object] = {}

    def _threshold_for(self, name: str) -> float:
        matches = [k for k in self.thresholds if k != 'default' and name.startswith(k)]
        if matches:
            return self.thresholds[max(matches, key=len)]
        return self.thresholds['default']

    def add(self, name: str, residual, threshold: Optional[float] = None, detail=None) -> bool:
        """记录一项残差检查: |residual| <= threshold 即通过

        Args:
            name: 检查名
            residual: 残差（Fraction 或 float）
            threshold: 阈值；None 时按 thresholds 查找
            detail: 附加信息（写进 JSON）

        Returns:
            是否通过
        """
        threshold = self._threshold_for(name) if threshold is None else threshold
        passed = abs(residual) <= threshold
        self._record(name, residual, threshold, passed, detail)
        return passed

    def add_bool(self, name: str, ok: bool, detail=None) -> bool:
        """记录一项是/否检查"""
        self._record(name, 0 if ok else 1, 0, bool(ok), detail)
        return bool(ok)

    def add_error(self, name: str, error: Exception) -> bool:
        """检查过程中抛出的库异常按失败记录"""
        self._record(name, None, None, False, f"{type(error).__name__}: {error}")
        return False

    def _record(self, name, residual, threshold, passed, detail):
        self.history['name'].append(name)
        self.history['residual'].append(residual)
        self.history['threshold'].append(threshold)
        self.history['passed'].append(passed)
        self.history['detail'].append(detail)

    def merge(self, other: 'CheckReport', prefix: str = ''):
        for j in range(len(other.history['name'])):
            self._record(prefix + other.history['name'][j], other.history['residual'][j],
                         other.history['threshold'][j], other.history['passed'][j],
                         other.history['detail'][j])

    @property
    def passed(self) -> bool:
        return all(self.history['passed'])

    @property
    def failures(self) -> List[str]:
        return [n for n, ok in zip(self.history['name'], self.history['passed']) if not ok]

    def get_summary(self) -> Dict:
        """获取统计摘要

        Returns:
            统计数据字典
        """
        total = len(self.history['name'])
        residuals = [abs(r) for r in self.history['residual'] if r is not None]
        return {
            'title': self.title,
            'checks': total,
            'passed': sum(self.history['passed']),
            'failed': total - sum(self.history['passed']),
            'max_residual': max(residuals) if residuals else 0,
            'ok': self.passed,
        }

    def to_json(self) -> Dict:
        checks = [
            {'name': n, 'residual': r, 'threshold': t, 'passed': ok, 'detail': d}
            for n, r, t, ok, d in zip(*(self.history[k] for k in
                                        ('name', 'residual', 'threshold', 'passed', 'detail')))
        ]
        return {'summary': self.get_summary(), 'checks': checks, 'data': self.data}

    def print_summary(self, file=None):
        """打印摘要；JSON 写到 stdout 时把 file 设成 sys.stderr"""
        out = file or sys.stdout
        summary = self.get_summary()
        print("=" * 60, file=out)
        print(f"📊 {self.title}", file=out)
        print("=" * 60, file=out)

        if summary['checks'] == 0:
            print("⚠️ 没有检查项", file=out)
            return

        for n, r, ok, d in zip(self.history['name'], self.history['residual'],
                               self.history['passed'], self.history['detail']):
            mark = '✅' if ok else '❌'
            res = '' if r is None else f"  残差 {float(abs(r)):.3e}"
            print(f"{mark} {n}{res}", file=out)
            if not ok and d is not None:
                print(f"   - {d}", file=out)

        print(f"\n检查项: {summary['checks']}，通过 {summary['passed']}，失败 {summary['failed']}",
              file=out)
        if summary['ok']:
            print("\n✅ 全部通过", file=out)
        else:
            print("\n❌ 存在失败项", file=out)
