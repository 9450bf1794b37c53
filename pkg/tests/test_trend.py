"""Desk-scale convergence trend: curricula reach the baseline's final quality sooner.

Takes tens of minutes; run with ``pytest -m slow``.
"""

import json

import pytest

from curriculum_gan.cli.main import main

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


@pytest.mark.slow
def test_curricula_converge_faster(tmp_path, monkeypatch):
    config = tmp_path / "config.yaml"
    config.write_text("logging:\n  level: WARNING\n")
    monkeypatch.delenv("CUGAN_THREADS", raising=False)
    assert main(["--config", str(config), *TREND_ARGS, "--out", str(tmp_path)]) == 0

    comparison = json.loads((tmp_path / "comparison.json").read_text())
    rows = {row["strategy"]: row for row in comparison["strategies"]}
    for strategy in ("batches", "weighting", "sampling"):
        assert rows[strategy]["speedup"] is not None, f"{strategy} never reached the baseline threshold"
        assert rows[strategy]["speedup"] <= 0.7, f"{strategy}: {rows[strategy]['speedup']:.2f}x of baseline iterations"
    assert rows["sampling"]["speedup"] <= 0.5
