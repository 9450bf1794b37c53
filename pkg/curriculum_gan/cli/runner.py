"""Experiment execution: per-seed training runs, comparisons, sweeps and artifact dumps."""

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from curriculum_gan.analysis.comparison import compare, median_curves
from curriculum_gan.curriculum.weights import easiness_weight
from curriculum_gan.data_sources import build_dataset, dump_csv_dataset, parse_score_source, resolve_raw_scores, write_score_file
from curriculum_gan.data_sources.specs import resolve_proxy
from curriculum_gan.data_sources.synthetic import Dataset
from curriculum_gan.difficulty.scoring import normalize_scores
from curriculum_gan.gan.trainer import GanTrainer
from curriculum_gan.models.config import REFERENCE_TOTAL_ITERATIONS, CurriculumConfig, Strategy
from curriculum_gan.models.records import ComparisonSummary, ExperimentSpec, MetricReport, RunStatus, RunSummary
from curriculum_gan.nn.checkpoint import checkpoint_dict
from curriculum_gan.utils.config import thread_cap
from curriculum_gan.utils.errors import ArtifactIOError, ConfigError, CurriculumGanError, UnsupportedSourceError
from curriculum_gan.visualization.plots import plot_convergence, plot_samples, plot_weight_decay

logger = logging.getLogger(__name__)

CSV_FLOAT_FORMAT = "%.17g"

# stage-cut grid tried for the batch curriculum, on the 80000-iteration reference schedule
REFERENCE_EASY_CUTS = (5000, 10000, 15000)
REFERENCE_MEDIUM_CUTS = (15000, 20000, 25000)


@dataclass(eq=False)
class SeedOutcome:
    seed: int
    status: RunStatus
    run_log: pd.DataFrame
    generator: Dict
    discriminator: Dict
    final_metrics: Optional[MetricReport]
    iterations_completed: int
    samples: np.ndarray
    wall_clock: float
    error: Optional[str] = None
    exit_code: int = 0


@dataclass(eq=False)
class RunOutcome:
    out_dir: Path
    seeds: List[SeedOutcome]

    @property
    def exit_code(self) -> int:
        return max((s.exit_code for s in self.seeds), default=0)

    def run_logs(self) -> List[pd.DataFrame]:
        return [s.run_log for s in self.seeds if s.status == RunStatus.OK]


def prepare_data(spec: ExperimentSpec) -> Tuple[Dataset, np.ndarray]:
    """Dataset and normalized difficulty scores for ``spec``."""
    dataset = build_dataset(spec.data)
    source = parse_score_source(spec.data.scores, resolve_proxy(spec.data))
    scores = normalize_scores(resolve_raw_scores(source, dataset))
    return dataset, scores


def _write_csv(frame: pd.DataFrame, path: Path):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    except OSError as e:
        raise ArtifactIOError(f"cannot write {path}: {e}")


def _write_json(payload, path: Path):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    except OSError as e:
        raise ArtifactIOError(f"cannot write {path}: {e}")


def train_seed(spec_json: str, seed: int) -> SeedOutcome:
    """Train one seed of a spec. Module-level so process pools can pickle it."""
    spec = ExperimentSpec.model_validate_json(spec_json)
    dataset, scores = prepare_data(spec)
    gan_config = spec.gan.model_copy(update={"seed": seed})
    trainer = GanTrainer(gan_config, dataset, scores, spec.curriculum, spec.metrics)

    started = time.perf_counter()
    status, error, exit_code, result = RunStatus.OK, None, 0, None
    try:
        result = trainer.train()
    except CurriculumGanError as e:
        logger.error(f"seed {seed} failed at t={trainer.state.t}: {e}")
        status, error, exit_code = RunStatus.FAILED, str(e), e.exit_code

    wall_clock = time.perf_counter() - started
    if result is not None:
        return SeedOutcome(
            seed=seed,
            status=status,
            run_log=result.run_log,
            generator=result.generator,
            discriminator=result.discriminator,
            final_metrics=result.final_metrics,
            iterations_completed=result.iterations_completed,
            samples=trainer.generate(),
            wall_clock=wall_clock,
        )
    # partial log of a failed run; the networks may hold non-finite values
    return SeedOutcome(
        seed=seed,
        status=status,
        run_log=trainer.run_log(),
        generator=checkpoint_dict(trainer.state.generator),
        discriminator=checkpoint_dict(trainer.state.discriminator),
        final_metrics=None,
        iterations_completed=trainer.state.t,
        samples=np.empty((0, dataset.dim)),
        wall_clock=wall_clock,
        error=error,
        exit_code=exit_code,
    )


def _train_all(spec: ExperimentSpec) -> List[SeedOutcome]:
    spec_json = spec.model_dump_json()
    workers = thread_cap(min(len(spec.seeds), os.cpu_count() or 1))
    if workers == 1:
        return [train_seed(spec_json, seed) for seed in spec.seeds]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(train_seed, [spec_json] * len(spec.seeds), spec.seeds))


def run_experiment(spec: ExperimentSpec, out_dir: Optional[Path] = None) -> RunOutcome:
    """Train every seed (in parallel up to CUGAN_THREADS) and write the run directory.

    Layout::

        <out>/summary.json              spec echo, per-seed status, median final metrics
        <out>/timing.json               wall-clock seconds per seed
        <out>/seed-<s>/run_log.csv
        <out>/seed-<s>/summary.json
        <out>/seed-<s>/samples.svg
        <out>/seed-<s>/checkpoints/{generator,discriminator}.json

    Everything except timing.json is byte-identical across repeated runs.
    """
    out_dir = Path(out_dir or spec.out_dir)
    logger.info(f"Running {spec.curriculum.strategy.value} on {spec.data.dataset}, seeds {spec.seeds} -> {out_dir}")
    dataset, _ = prepare_data(spec)
    outcomes = _train_all(spec)

    # single collector writes all files after every seed has finished
    config_echo = spec.model_dump(mode="json", exclude={"out_dir", "seeds"})
    for outcome in outcomes:
        seed_dir = out_dir / f"seed-{outcome.seed}"
        _write_csv(outcome.run_log, seed_dir / "run_log.csv")
        summary = RunSummary(
            status=outcome.status,
            seed=outcome.seed,
            strategy=spec.curriculum.strategy.value,
            config=config_echo,
            final_metrics=outcome.final_metrics,
            iterations_completed=outcome.iterations_completed,
            error=outcome.error,
        )
        _write_json(summary.model_dump(mode="json"), seed_dir / "summary.json")
        _write_json(outcome.generator, seed_dir / "checkpoints" / "generator.json")
        _write_json(outcome.discriminator, seed_dir / "checkpoints" / "discriminator.json")
        if outcome.status == RunStatus.OK:
            plot_samples(dataset.samples, outcome.samples, seed_dir / "samples.svg", title=f"{spec.curriculum.strategy.value}, seed {outcome.seed}")

    ok_logs = [o.run_log for o in outcomes if o.status == RunStatus.OK and not o.run_log.empty]
    final = None
    if ok_logs:
        final = median_curves(ok_logs).iloc[-1].drop(labels=["iteration"]).to_dict()
    _write_json(
        {
            "config": config_echo,
            "seeds": spec.seeds,
            "status": RunStatus.OK.value if all(o.status == RunStatus.OK for o in outcomes) else RunStatus.FAILED.value,
            "runs": {str(o.seed): o.status.value for o in outcomes},
            "median_final_metrics": final,
        },
        out_dir / "summary.json",
    )
    _write_json({str(o.seed): round(o.wall_clock, 3) for o in outcomes}, out_dir / "timing.json")
    return RunOutcome(out_dir=out_dir, seeds=outcomes)


def check_comparable(specs: Dict[str, ExperimentSpec]):
    """All compared runs must share dataset, scores, seeds and iteration budget."""
    reference_label, reference = next(iter(specs.items()))
    for label, spec in specs.items():
        mismatches = [
            name
            for name, ours, theirs in (
                ("dataset", spec.data, reference.data),
                ("seeds", spec.seeds, reference.seeds),
                ("total_iterations", spec.gan.total_iterations, reference.gan.total_iterations),
                ("eval_every", spec.gan.eval_every, reference.gan.eval_every),
            )
            if ours != theirs
        ]
        if mismatches:
            raise ConfigError(f"runs {label!r} and {reference_label!r} differ in {', '.join(mismatches)}")


def compare_experiments(specs: Dict[str, ExperimentSpec], out_dir: Path, baseline: str = "none") -> ComparisonSummary:
    """Run each labelled spec into ``<out>/<label>/`` and compare against ``baseline``."""
    check_comparable(specs)
    out_dir = Path(out_dir)
    logs = {}
    for label, spec in specs.items():
        outcome = run_experiment(spec, out_dir / label)
        failed = [o for o in outcome.seeds if o.exit_code]
        if failed:
            raise _error_for(failed[0])
        logs[label] = outcome.run_logs()

    summary = compare(logs, baseline=baseline, seeds=next(iter(specs.values())).seeds)
    curves = {label: median_curves(frames) for label, frames in logs.items()}
    table = pd.concat([curve.assign(strategy=label) for label, curve in curves.items()], ignore_index=True)
    _write_csv(table, out_dir / "median_curves.csv")
    _write_json(summary.model_dump(mode="json"), out_dir / "comparison.json")
    plot_convergence(curves, out_dir / "convergence.svg", threshold=summary.threshold)
    return summary


def _error_for(outcome: SeedOutcome) -> CurriculumGanError:
    error = CurriculumGanError(f"seed {outcome.seed} failed: {outcome.error}")
    error.exit_code = outcome.exit_code
    return error


def strategy_specs(
    base: ExperimentSpec,
    strategies: Sequence[Strategy],
    k_overrides: Optional[Dict[Strategy, float]] = None,
) -> Dict[str, ExperimentSpec]:
    """One spec per strategy, identical apart from the curriculum."""
    specs = {}
    for strategy in strategies:
        update = {"strategy": strategy}
        if k_overrides and strategy in k_overrides:
            update["k"] = k_overrides[strategy]
        curriculum = CurriculumConfig(**{**base.curriculum.model_dump(), **update})
        specs[strategy.value] = base.model_copy(update={"curriculum": curriculum})
    return specs


def reference_stage_cut_grid(total_iterations: int) -> List[List[int]]:
    """The easy/medium cut combinations of the reference tuning, scaled to ``total_iterations``."""
    scale = total_iterations / REFERENCE_TOTAL_ITERATIONS
    grid = []
    for easy in REFERENCE_EASY_CUTS:
        for medium in REFERENCE_MEDIUM_CUTS:
            cuts = [int(round(easy * scale)), int(round(medium * scale))]
            if cuts[0] < cuts[1] < total_iterations:
                grid.append(cuts)
    return grid


def sweep(spec: ExperimentSpec, param: str, values: Sequence, out_dir: Path) -> pd.DataFrame:
    """Final median metrics for each value of ``k`` or of the stage cuts."""
    out_dir = Path(out_dir)
    rows = []
    for value in values:
        if param == "k":
            update, label = {"k": float(value)}, f"k={float(value):g}"
        elif param == "stage-cuts":
            update, label = {"stage_cuts": list(value), "m": len(value) + 1}, "cuts=" + "-".join(str(c) for c in value)
        else:
            raise ConfigError(f"cannot sweep {param!r} (expected k or stage-cuts)")
        curriculum = CurriculumConfig(**{**spec.curriculum.model_dump(), **update})
        outcome = run_experiment(spec.model_copy(update={"curriculum": curriculum}), out_dir / label)
        logs = outcome.run_logs()
        row = {"param": param, "value": label, "status": "ok" if not outcome.exit_code else "failed"}
        if logs:
            row.update(median_curves(logs).iloc[-1].drop(labels=["iteration"]).to_dict())
        rows.append(row)
    table = pd.DataFrame(rows)
    _write_csv(table, out_dir / "sweep.csv")
    return table


def weight_table(scores: Sequence[float], k: float, gamma: float, t_grid: Sequence[float]) -> pd.DataFrame:
    """Easiness weight of each score over ``t_grid``; one column per score."""
    t_grid = np.asarray(t_grid, dtype=np.float64)
    columns = {"t": t_grid}
    for s in scores:
        columns[f"s={s:g}"] = easiness_weight(float(s), t_grid, k, gamma)
    return pd.DataFrame(columns)


def dump_weights(scores: Sequence[float], k: float, gamma: float, t_grid: Sequence[float], out_dir: Path) -> pd.DataFrame:
    """weights.csv plus weights.svg with the decay curves."""
    out_dir = Path(out_dir)
    table = weight_table(scores, k, gamma, t_grid)
    _write_csv(table, out_dir / "weights.csv")
    plot_weight_decay(table, out_dir / "weights.svg")
    return table


def dump_dataset(spec: ExperimentSpec, out_dir: Path) -> Dict[str, Path]:
    """dataset.csv, and raw_scores.txt (usable with ``--scores``) when scores can be resolved."""
    out_dir = Path(out_dir)
    dataset = build_dataset(spec.data)
    written = {"dataset": dump_csv_dataset(dataset, out_dir / "dataset.csv")}
    try:
        source = parse_score_source(spec.data.scores, resolve_proxy(spec.data))
        raw = resolve_raw_scores(source, dataset)
    except UnsupportedSourceError as e:
        logger.warning(f"Not writing raw scores: {e}")
    else:
        written["raw_scores"] = write_score_file(raw, out_dir / "raw_scores.txt")
    logger.info(f"Wrote {dataset.n} x {dataset.dim} dataset to {written['dataset']}")
    return written


def replot(directory: Path) -> List[Path]:
    """Rebuild SVGs from the CSV files found in a run, compare or dump-weights directory."""
    directory = Path(directory)
    written = []
    if (directory / "median_curves.csv").exists():
        table = pd.read_csv(directory / "median_curves.csv")
        curves = {name: frame for name, frame in table.groupby("strategy", sort=False)}
        threshold = None
        if (directory / "comparison.json").exists():
            threshold = json.loads((directory / "comparison.json").read_text(encoding="utf-8"))["threshold"]
        written.append(plot_convergence(curves, directory / "convergence.svg", threshold=threshold))
    if (directory / "weights.csv").exists():
        written.append(plot_weight_decay(pd.read_csv(directory / "weights.csv"), directory / "weights.svg"))
    seed_logs = sorted(directory.glob("seed-*/run_log.csv"))
    if seed_logs:
        curves = {path.parent.name: pd.read_csv(path) for path in seed_logs}
        curves = {name: frame for name, frame in curves.items() if not frame.empty}
        if curves:
            written.append(plot_convergence(curves, directory / "convergence.svg"))
    if not written:
        raise ArtifactIOError(f"nothing to plot in {directory}")
    return written
