"""Tests for median curves and threshold-based strategy comparison."""

import pandas as pd
import pytest

from curriculum_gan.analysis import compare, iterations_to_threshold, median_curves
from curriculum_gan.utils.errors import ConfigError


def run_log(values, coverage=1.0, every=100):
    return pd.DataFrame(
        {
            "iteration": [every * (i + 1) for i in range(len(values))],
            "d_loss_real": 0.5,
            "d_loss_fake": 0.5,
            "g_loss": 0.0,
            "mean_weight": 1.0,
            "sliced_wasserstein": values,
            "mode_coverage": coverage,
            "hq_fraction": 0.9,
        }
    )


def test_median_over_seeds():
    curve = median_curves([run_log([1.0, 0.5]), run_log([3.0, 0.1]), run_log([2.0, 0.3])])
    assert curve["iteration"].tolist() == [100, 200]
    assert curve["sliced_wasserstein"].tolist() == [2.0, 0.3]


def test_iterations_to_threshold():
    curve = run_log([1.0, 0.6, 0.4, 0.5])
    assert iterations_to_threshold(curve, 0.5) == 300
    assert iterations_to_threshold(curve, 0.1) is None


def test_strategy_against_itself_ties():
    logs = [run_log([1.0, 0.5, 0.2]), run_log([0.9, 0.6, 0.3])]
    summary = compare({"none": logs, "weighting": [log.copy() for log in logs]}, seeds=[0, 1])
    by_name = {s.strategy: s for s in summary.strategies}
    assert by_name["weighting"].iterations_to_threshold == by_name["none"].iterations_to_threshold == 300
    assert by_name["weighting"].speedup == 1.0
    assert set(by_name["weighting"].verdicts.values()) == {"tie"}
    assert summary.threshold == pytest.approx(0.25)
    assert summary.seeds == [0, 1] and summary.total_iterations == 300


def test_faster_strategy():
    summary = compare(
        {
            "none": [run_log([1.0, 0.8, 0.6, 0.5], coverage=0.75)],
            "sampling": [run_log([0.7, 0.5, 0.45, 0.4], coverage=1.0)],
        }
    )
    sampling = next(s for s in summary.strategies if s.strategy == "sampling")
    assert sampling.iterations_to_threshold == 200
    assert sampling.speedup == pytest.approx(0.5)
    assert sampling.verdicts["sliced_wasserstein"] == "win"
    assert sampling.verdicts["mode_coverage"] == "win"
    assert sampling.verdicts["hq_fraction"] == "tie"


def test_speedup_is_relative_to_the_full_run():
    # the baseline touches its final value early and then plateaus
    summary = compare(
        {
            "none": [run_log([1.0, 0.5, 0.6, 0.55, 0.5])],
            "batches": [run_log([0.5, 0.4, 0.4, 0.4, 0.4])],
        }
    )
    by_name = {s.strategy: s for s in summary.strategies}
    assert by_name["none"].iterations_to_threshold == 200
    assert by_name["none"].speedup == pytest.approx(0.4)
    assert by_name["batches"].iterations_to_threshold == 100
    assert by_name["batches"].speedup == pytest.approx(0.2)


def test_never_reaching_threshold():
    summary = compare({"none": [run_log([1.0, 0.2])], "batches": [run_log([1.0, 0.9])]})
    batches = next(s for s in summary.strategies if s.strategy == "batches")
    assert batches.iterations_to_threshold is None and batches.speedup is None
    assert batches.verdicts["sliced_wasserstein"] == "loss"


def test_missing_metadata_verdict():
    summary = compare({"none": [run_log([1.0], coverage=None)], "weighting": [run_log([0.5], coverage=None)]})
    weighting = next(s for s in summary.strategies if s.strategy == "weighting")
    assert weighting.verdicts["mode_coverage"] == "n/a"


def test_missing_baseline():
    with pytest.raises(ConfigError):
        compare({"weighting": [run_log([1.0])]})


def test_grid_mismatch():
    with pytest.raises(ConfigError):
        compare({"none": [run_log([1.0, 0.5])], "sampling": [run_log([1.0, 0.5], every=50)]})
