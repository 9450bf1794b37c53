"""Command-line entry point: run, compare, sweep, dump-weights, dump-dataset, plot.

Exit codes: 0 ok, 2 config error, 3 training diverged, 4 I/O error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import ValidationError

from curriculum_gan import __version__
from curriculum_gan.cli import runner
from curriculum_gan.models.config import (
    CurriculumConfig,
    DataConfig,
    GanConfig,
    MetricsConfig,
    Strategy,
    gamma_for_horizon,
)
from curriculum_gan.models.records import ExperimentSpec
from curriculum_gan.utils.config import load_config
from curriculum_gan.utils.errors import ConfigError, CurriculumGanError
from curriculum_gan.utils.logger import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_CONFIG, EXIT_DIVERGED, EXIT_IO = 0, 2, 3, 4

# k used by each strategy in the default comparison
COMPARE_K = {Strategy.WEIGHTING: 2.0, Strategy.SAMPLING: 4.0}


def _int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _float_list(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _gamma(text: str):
    if text == "auto":
        return text
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"gamma must be a number or 'auto', got {text!r}")


def _add_data_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--dataset", help="ring:<modes>,<radius>,<sigma> | graded:<modes>,<radius>,<smin>,<smax> | csv:<path>")
    parser.add_argument("--samples-per-mode", type=int)
    parser.add_argument("--scores", help="analytic | constant[:<value>] | <score file>")
    parser.add_argument("--proxy", choices=["mahalanobis", "euclidean"], help="analytic difficulty proxy")
    parser.add_argument("--data-seed", type=int)


def _add_training_flags(parser: argparse.ArgumentParser):
    _add_data_flags(parser)
    parser.add_argument("--strategy", choices=[s.value for s in Strategy])
    parser.add_argument("--k", type=float)
    parser.add_argument("--gamma", type=_gamma, help="decay rate, or 'auto' for 10/iters")
    parser.add_argument("--m", type=int, help="number of difficulty batches")
    parser.add_argument("--stage-cuts", type=_int_list, help="a,b,...")
    parser.add_argument("--weighting-mode", choices=["additive", "multiplicative"])
    parser.add_argument("--loss", choices=["hinge", "cross-entropy"])
    parser.add_argument("--batch-size", type=int)
    parser.add_argument("--iters", type=int)
    parser.add_argument("--eval-every", type=int)
    parser.add_argument("--eval-samples", type=int)
    parser.add_argument("--d-steps", type=int)
    parser.add_argument("--lr", type=float, help="learning rate of both networks")
    parser.add_argument("--n-projections", type=int)
    parser.add_argument("--seeds", type=_int_list, help="a,b,c")
    parser.add_argument("--out", type=Path)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="curriculum-gan", description=__doc__.splitlines()[0])
    parser.add_argument("--config", type=Path, help="YAML config (default: config/config.yaml)")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING, ...")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    _add_training_flags(sub.add_parser("run", help="train one strategy over one or more seeds"))

    compare = sub.add_parser("compare", help="train several strategies and compare convergence")
    _add_training_flags(compare)
    compare.add_argument("--strategies", default="none,batches,weighting,sampling")
    compare.add_argument("--k-weighting", type=float, default=COMPARE_K[Strategy.WEIGHTING])
    compare.add_argument("--k-sampling", type=float, default=COMPARE_K[Strategy.SAMPLING])

    sweep = sub.add_parser("sweep", help="final metrics over a grid of k or stage cuts")
    _add_training_flags(sweep)
    sweep.add_argument("--param", choices=["k", "stage-cuts"], required=True)
    sweep.add_argument("--values", help="k: 1,2,4; stage-cuts: a/b,c/d (default: the reference grid)")

    weights = sub.add_parser("dump-weights", help="easiness-weight trajectories as CSV and SVG")
    weights.add_argument("--score-values", type=_float_list, default=[-1.0, -0.5, 0.0, 0.5, 1.0])
    weights.add_argument("--k", type=float, default=1.0)
    weights.add_argument("--gamma", type=float, default=5e-5)
    weights.add_argument("--t-max", type=float, help="default: 10/gamma")
    weights.add_argument("--t-points", type=int, default=201)
    weights.add_argument("--out", type=Path, default=Path("runs/weights"))

    dataset = sub.add_parser("dump-dataset", help="write the configured dataset (and raw scores) to CSV")
    _add_data_flags(dataset)
    dataset.add_argument("--out", type=Path, default=Path("runs/dataset"))

    plot = sub.add_parser("plot", help="rebuild SVG plots from the CSV files of an output directory")
    plot.add_argument("--out", type=Path, required=True)
    return parser


def _section(config: Dict[str, Any], name: str) -> Dict[str, Any]:
    return dict(config.get(name) or {})


def build_spec(args: argparse.Namespace, config: Dict[str, Any]) -> ExperimentSpec:
    """Defaults < YAML sections < command-line flags."""
    data = _section(config, "data")
    gan = _section(config, "gan")
    curriculum = _section(config, "curriculum")
    metrics = _section(config, "metrics")
    runner_cfg = _section(config, "runner")

    def put(target: Dict, key: str, value):
        if value is not None:
            target[key] = value

    flags = vars(args)
    for key in ("dataset", "samples_per_mode", "scores", "proxy", "data_seed"):
        put(data, key, flags.get(key))
    put(gan, "loss_kind", flags.get("loss"))
    put(gan, "batch_size", flags.get("batch_size"))
    put(gan, "total_iterations", flags.get("iters"))
    put(gan, "eval_every", flags.get("eval_every"))
    put(gan, "eval_samples", flags.get("eval_samples"))
    put(gan, "d_steps_per_g_step", flags.get("d_steps"))
    if flags.get("lr") is not None:
        gan["g_lr"] = gan["d_lr"] = flags["lr"]
    for key in ("strategy", "k", "m", "stage_cuts", "weighting_mode"):
        put(curriculum, key, flags.get(key))
    put(metrics, "n_projections", flags.get("n_projections"))

    gan_config = GanConfig(**gan)
    gamma = flags.get("gamma")
    if gamma is None:
        gamma = curriculum.get("gamma")
    if gamma == "auto":
        gamma = gamma_for_horizon(gan_config.total_iterations)
    put(curriculum, "gamma", gamma)
    curriculum["total_iterations"] = gan_config.total_iterations

    seeds = flags.get("seeds") or runner_cfg.get("seeds") or [0]
    out_dir = flags.get("out") or runner_cfg.get("out_dir") or "runs"
    return ExperimentSpec(
        data=DataConfig(**data),
        gan=gan_config,
        curriculum=CurriculumConfig(**curriculum),
        metrics=MetricsConfig(**metrics),
        seeds=seeds,
        out_dir=Path(out_dir),
    )


def _parse_cut_values(text: Optional[str], total_iterations: int) -> List[List[int]]:
    if not text:
        return runner.reference_stage_cut_grid(total_iterations)
    try:
        return [[int(c) for c in group.split("/")] for group in text.split(",") if group.strip()]
    except ValueError:
        raise ConfigError(f"stage-cut values must look like a/b,c/d, got {text!r}")


def cmd_run(args, config) -> int:
    spec = build_spec(args, config)
    outcome = runner.run_experiment(spec)
    logger.info(f"Run written to {outcome.out_dir}")
    return outcome.exit_code


def cmd_compare(args, config) -> int:
    if args.gamma is None:
        args.gamma = "auto"
    base = build_spec(args, config)
    try:
        strategies = [Strategy(s.strip()) for s in args.strategies.split(",") if s.strip()]
    except ValueError as e:
        raise ConfigError(str(e))
    k_overrides = {}
    if args.k is None:
        k_overrides = {Strategy.WEIGHTING: args.k_weighting, Strategy.SAMPLING: args.k_sampling}
    specs = runner.strategy_specs(base, strategies, k_overrides)
    baseline = Strategy.NONE.value if Strategy.NONE.value in specs else next(iter(specs))
    summary = runner.compare_experiments(specs, base.out_dir, baseline=baseline)
    for row in summary.strategies:
        logger.info(
            f"{row.strategy:>10}: reaches {summary.threshold:.4f} at {row.iterations_to_threshold} "
            f"(x{row.speedup if row.speedup is not None else float('nan'):.2f} of baseline), {row.verdicts}"
        )
    return EXIT_OK


def cmd_sweep(args, config) -> int:
    spec = build_spec(args, config)
    if args.param == "k":
        values = _float_list(args.values) if args.values else [1.0, 2.0, 4.0]
    else:
        values = _parse_cut_values(args.values, spec.gan.total_iterations)
    table = runner.sweep(spec, args.param, values, spec.out_dir)
    logger.info(f"Sweep over {args.param}:\n{table.to_string(index=False)}")
    return EXIT_OK if (table["status"] == "ok").all() else EXIT_DIVERGED


def cmd_dump_weights(args, config) -> int:
    t_max = args.t_max if args.t_max is not None else 10.0 / args.gamma
    t_grid = np.linspace(0.0, t_max, max(2, args.t_points))
    runner.dump_weights(args.score_values, args.k, args.gamma, t_grid, args.out)
    logger.info(f"Weight trajectories written to {args.out}")
    return EXIT_OK


def cmd_dump_dataset(args, config) -> int:
    data = _section(config, "data")
    for key in ("dataset", "samples_per_mode", "scores", "proxy", "data_seed"):
        if getattr(args, key, None) is not None:
            data[key] = getattr(args, key)
    runner.dump_dataset(ExperimentSpec(data=DataConfig(**data)), args.out)
    return EXIT_OK


def cmd_plot(args, config) -> int:
    for path in runner.replot(args.out):
        logger.info(f"Wrote {path}")
    return EXIT_OK


COMMANDS = {
    "run": cmd_run,
    "compare": cmd_compare,
    "sweep": cmd_sweep,
    "dump-weights": cmd_dump_weights,
    "dump-dataset": cmd_dump_dataset,
    "plot": cmd_plot,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.config, level=args.log_level)
    config = load_config(args.config)
    try:
        return COMMANDS[args.command](args, config)
    except ValidationError as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_CONFIG
    except CurriculumGanError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
