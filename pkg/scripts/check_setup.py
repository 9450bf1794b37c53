"""Quick check that the package imports and a tiny run completes."""

import sys
import tempfile
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))


def check_imports():
    """Check that all subpackages can be imported."""
    print("Checking imports...")
    try:
        from curriculum_gan.curriculum import plan_for_iteration  # noqa: F401
        from curriculum_gan.gan import GanTrainer  # noqa: F401
        from curriculum_gan.analysis import sliced_wasserstein  # noqa: F401
        from curriculum_gan.cli.main import main  # noqa: F401
        print("[OK] Package imports OK")
        return True
    except Exception as e:
        print(f"[FAIL] Imports failed: {e}")
        return False


def check_tiny_run():
    """Train 200 iterations of the sampling curriculum."""
    print("\nChecking a tiny run...")
    from curriculum_gan.cli.main import main

    with tempfile.TemporaryDirectory() as out:
        code = main([
            "run", "--strategy", "sampling", "--k", "4", "--gamma", "auto",
            "--dataset", "ring:8,2,0.05,100", "--iters", "200", "--eval-every", "100",
            "--seeds", "0", "--out", out,
        ])
        if code != 0:
            print(f"[FAIL] Run exited with code {code}")
            return False
        print(f"[OK] Run finished, artifacts: {sorted(p.name for p in Path(out, 'seed-0').iterdir())}")
    return True


def main():
    print("=" * 50)
    print("Curriculum GAN - Setup Check")
    print("=" * 50)
    success = check_imports() and check_tiny_run()
    print("\n" + "=" * 50)
    print("[SUCCESS] Setup is working." if success else "[FAIL] Some checks failed, see above.")
    print("=" * 50)
    return success


if __name__ == "__main__":
    sys.exit(0 if main() else 1)
