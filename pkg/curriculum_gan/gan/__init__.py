"""GAN objectives and the curriculum-aware trainer."""

from .losses import DiscriminatorLoss, GeneratorLoss, discriminator_loss, generator_loss
from .trainer import GanTrainer, TrainerState, TrainingResult, build_networks, run_log_frame, train

__all__ = [
    "DiscriminatorLoss",
    "GanTrainer",
    "GeneratorLoss",
    "TrainerState",
    "TrainingResult",
    "build_networks",
    "discriminator_loss",
    "generator_loss",
    "run_log_frame",
    "train",
]
