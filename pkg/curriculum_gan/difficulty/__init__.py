"""Difficulty scores: normalization, ranking and analytic proxies."""

from .scoring import analytic_difficulty, analytic_difficulties, normalize_scores, rank_by_difficulty

__all__ = ["analytic_difficulty", "analytic_difficulties", "normalize_scores", "rank_by_difficulty"]
