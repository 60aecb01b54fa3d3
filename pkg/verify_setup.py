"""
基础验证脚本

验证项目核心功能：
1. 依赖导入
2. 配置与基准表加载
3. 精确递推与扰动
4. 零点求解
"""

import sys
from fractions import Fraction
from pathlib import Path

# 添加项目路径
project_root = Path(__file__).parent
sys.path.append(str(project_root))


def test_imports():
    """测试依赖导入"""
    print("=" * 60)
    print("测试1: 检查依赖导入")
    print("=" * 60)

    try:
        import numpy as np
        print(f"✅ NumPy {np.__version__}")
    except ImportError as e:
        print(f"❌ NumPy 导入失败: {e}")
        return False

    try:
        import scipy
        print(f"✅ SciPy {scipy.__version__}")
    except ImportError as e:
        print(f"❌ SciPy 导入失败: {e}")
        return False

    try:
        import mpmath
        print(f"✅ mpmath {mpmath.__version__}")
    except ImportError as e:
        print(f"❌ mpmath 导入失败: {e}")
        return False

    try:
        import yaml
        print(f"✅ PyYAML 已安装")
    except ImportError as e:
        print(f"❌ PyYAML 导入失败: {e}")
        return False

    try:
        import hypothesis
        print(f"✅ Hypothesis {hypothesis.__version__}")
    except ImportError:
        print(f"⚠️  Hypothesis 未安装（性质测试不可用）")

    return True


def test_config():
    """测试配置加载"""
    print("\n" + "=" * 60)
    print("测试2: 配置文件加载")
    print("=" * 60)

    try:
        from src.utils.config import DEFAULT_CONFIG_PATH, load_config, resolve_path
        import yaml

        config = load_config()
        print(f"✅ 配置文件加载成功: {DEFAULT_CONFIG_PATH}")
        print(f"   - 数值模式: {config['numeric']['mode']}")
        print(f"   - 浮点容差: {config['numeric']['float_tol']}")
        print(f"   - Toda 测度节点: {config['toda']['measure']['nodes']}")

        golden_path = resolve_path(config['tables']['golden_file'])
        with open(golden_path, 'r', encoding='utf-8') as f:
            golden = yaml.safe_load(f)
        print(f"✅ 基准表加载成功: {', '.join(sorted(golden))}")
        return True
    except Exception as e:
        print(f"❌ 配置加载失败: {e}")
        return False


def test_recurrence():
    """测试精确递推与扰动表示"""
    print("\n" + "=" * 60)
    print("测试3: 精确递推与扰动")
    print("=" * 60)

    try:
        from src.core.recurrence import generate_family
        from src.perturbation.perturbation import Perturbation, perturbed_family_direct
        from src.perturbation.representation import perturbed_family_represented
        from src.zeros.ljacobi import ljacobi_seqs

        seqs = ljacobi_seqs(11, 12)
        P = generate_family(seqs, 6)
        print(f"✅ {seqs.describe()}: P_6 首项系数 {P[6].leading}")

        pert = Perturbation(3, Fraction(-2))
        direct = perturbed_family_direct(seqs, pert, 6)
        represented = perturbed_family_represented(seqs, pert, 6)
        if all(a.equals(b) for a, b in zip(direct, represented)):
            print(f"✅ 表示公式与直接递推逐系数一致 ({pert.to_spec()})")
            return True
        print(f"❌ 表示公式与直接递推不一致")
        return False
    except Exception as e:
        print(f"❌ 递推检查失败: {e}")
        import traceback
        traceback.print_exc()
        return False


def test_zeros():
    """测试零点求解"""
    print("\n" + "=" * 60)
    print("测试4: 零点求解")
    print("=" * 60)

    try:
        from src.cli.tables import run_table
        report = run_table('T1')
        summary = report.get_summary()
        print(f"✅ T1 复现完成: {summary['passed']}/{summary['checks']} 项通过")
        print(f"   - 扰动层: {report.data['levels']}")
        return summary['ok']
    except Exception as e:
        print(f"❌ 零点求解失败: {e}")
        return False


def main():
    """主函数"""
    print("\n" + "🧮" * 30)
    print("R_I 正交多项式工具包 - 基础功能验证")
    print("🧮" * 30 + "\n")

    results = []

    # 运行所有测试
    results.append(("依赖导入", test_imports()))
    results.append(("配置加载", test_config()))
    results.append(("精确递推", test_recurrence()))
    results.append(("零点求解", test_zeros()))

    # 汇总结果
    print("\n" + "=" * 60)
    print("测试结果汇总")
    print("=" * 60)

    passed = sum(1 for _, result in results if result)
    total = len(results)

    for name, result in results:
        status = "✅ 通过" if result else "❌ 失败"
        print(f"{name:.<40} {status}")

    print(f"\n通过率: {passed}/{total} ({passed/total*100:.1f}%)")

    if passed == total:
        print("\n🎉 所有测试通过！项目基础功能正常")
        print("\n📝 下一步:")
        print("   - python quickstart.py")
        print("   - python -m src.cli.harness suite representation")
        return 0
    else:
        print("\n⚠️  部分测试失败，请检查错误信息")
        return 1


if __name__ == '__main__':
    sys.exit(main())
