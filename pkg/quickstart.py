#!/usr/bin/env python3
"""
快速启动脚本

一键完成依赖检查、零点表复现与恒等式套件
"""

import sys
import subprocess
from pathlib import Path


def print_header(text: str):
    """打印标题"""
    print("\n" + "=" * 60)
    print(text)
    print("=" * 60 + "\n")


def run_command(cmd: list, description: str) -> bool:
    """运行命令

    Args:
        cmd: 命令列表
        description: 描述

    Returns:
        是否成功（退出码 0）
    """
    print(f"🔄 {description}...")
    result = subprocess.run(cmd, capture_output=True, text=True)
    if result.returncode == 0:
        print(f"✅ {description} 完成")
        return True
    print(f"❌ {description} 失败（退出码 {result.returncode}）")
    if result.stderr:
        print(f"错误信息: {result.stderr[-2000:]}")
    return False


def harness(*args: str) -> list:
    return [sys.executable, '-m', 'src.cli.harness', *args]


def main():
    """主函数"""
    print_header("🧮 R_I 正交多项式工具包 - 快速启动")

    base_path = Path(__file__).parent
    reports = base_path / 'reports'

    # 步骤1: 检查依赖
    print_header("步骤1: 检查依赖")
    try:
        import numpy
        import scipy
        import mpmath
        import yaml
        print("✅ 所有依赖已安装")
        print(f"   - NumPy: {numpy.__version__}")
        print(f"   - SciPy: {scipy.__version__}")
        print(f"   - mpmath: {mpmath.__version__}")
    except ImportError as e:
        print(f"❌ 缺少依赖: {e}")
        print("\n请运行以下命令安装:")
        print("  pip install -r requirements.txt")
        sys.exit(1)

    # 步骤2: 复现零点表
    print_header("步骤2: 复现零点表 T1-T5")
    ok = True
    for table_id in ('T1', 'T2', 'T3', 'T4', 'T5'):
        ok &= run_command(harness('--out', str(reports / f'{table_id}.json'), 'table', table_id),
                          f"表 {table_id}")
        run_command(harness('--format', 'csv', '--out', str(reports / f'{table_id}.csv'), 'table', table_id),
                    f"表 {table_id} 作图数据")

    # 步骤3: 选择套件
    print_header("步骤3: 选择恒等式套件")
    print("请选择要运行的套件:")
    print("  1. 表示公式 + 转移矩阵（精确有理运算）")
    print("  2. Stieltjes 截断恒等式")
    print("  3. Toda 流与链序列（数值，约 10 秒）")
    print("  4. 全部")
    print("  5. 跳过")

    choice = input("\n请输入选择 (1-5): ").strip()
    suites = {
        '1': ['representation', 'transfer'],
        '2': ['stieltjes'],
        '3': ['toda', 'chain'],
        '4': ['representation', 'transfer', 'stieltjes', 'toda', 'chain'],
        '5': [],
    }
    if choice not in suites:
        print("\n❌ 无效选择")
        sys.exit(1)
    for name in suites[choice]:
        ok &= run_command(harness('--out', str(reports / f'suite_{name}.json'), 'suite', name),
                          f"套件 {name}")

    # 完成
    print_header("🎉 完成!" if ok else "⚠️ 存在失败项")
    print("下一步:")
    print(f"  1. 查看报告: {reports}")
    print("  2. 调整配置: config/ri_config.yaml")
    print("  3. 查看文档: docs/getting_started.md")
    print("  4. 运行测试: pytest tests/")
    sys.exit(0 if ok else 1)


if __name__ == '__main__':
    main()
