"""Reproduce the faster-convergence trend on the 8-mode ring.

Runs the baseline and all three curricula (batches; weighting with k=2;
sampling with k=4; gamma so that 10/gamma equals the run length) over five
seeds and reports how many iterations each needs to reach the baseline's
final median sliced-Wasserstein value.
"""

import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from curriculum_gan.cli.main import main  # noqa: E402

TREND_ARGS = [
    "compare",
    "--dataset", "ring:8,2,0.05",
    "--samples-per-mode", "1000",
    "--scores", "analytic",
    "--proxy", "euclidean",
    "--iters", "20000",
    "--eval-every", "500",
    "--batch-size", "64",
    "--gamma", "auto",
    "--seeds", "0,1,2,3,4",
]


if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "runs/trend"
    sys.exit(main(TREND_ARGS + ["--out", out]))
