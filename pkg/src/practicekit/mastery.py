"""Latent skill ratings on a logit scale, Elo-style per-attempt updates,
and discretisation of the mastery score into five named bands.

A rating is an unbounded float. The mastery score is its logistic
transform, so score and band always derive from the single rating that
the attempt log determines.
"""

from __future__ import annotations

import enum
import math

from .errors import ConfigError, ValidationError

DEFAULT_INITIAL_RATING = 0.0
DEFAULT_K_LEARNER = 0.4
DEFAULT_K_ITEM = 0.2
DEFAULT_BAND_THRESHOLDS = (0.2, 0.4, 0.6, 0.8)

# Smallest/largest floats still inside the open interval (0, 1).
_SCORE_FLOOR = 5e-324
_SCORE_CEIL = math.nextafter(1.0, 0.0)


class MasteryBand(enum.IntEnum):
    """Five ordered competence bands; ordinal 0 (Novice) to 4 (Expert)."""

    NOVICE = 0
    ADVANCED_BEGINNER = 1
    COMPETENT = 2
    PROFICIENT = 3
    EXPERT = 4

    @property
    def label(self) -> str:
        return _BAND_LABELS[self]

    @classmethod
    def from_label(cls, label: str) -> "MasteryBand":
        for band, name in _BAND_LABELS.items():
            if name == label:
                return band
        raise ValidationError(f"unknown mastery band label: {label!r}")


_BAND_LABELS = {
    MasteryBand.NOVICE: "Novice",
    MasteryBand.ADVANCED_BEGINNER: "AdvancedBeginner",
    MasteryBand.COMPETENT: "Competent",
    MasteryBand.PROFICIENT: "Proficient",
    MasteryBand.EXPERT: "Expert",
}


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}")
    return value


def logistic(x: float) -> float:
    """Numerically stable 1 / (1 + e^-x)."""
    if x >= 0.0:
        return 1.0 / (1.0 + math.exp(-x))
    z = math.exp(x)
    return z / (1.0 + z)


def _clamp_open_unit(p: float) -> float:
    # logistic() saturates to exactly 0.0/1.0 beyond |x| ~ 37; pull the
    # result back inside the open interval (0, 1).
    return min(max(p, _SCORE_FLOOR), _SCORE_CEIL)


def predict_correct(learner: float, difficulty: float) -> float:
    """Probability that a learner at ``learner`` solves an item at ``difficulty``."""
    learner = _require_finite("learner rating", learner)
    difficulty = _require_finite("difficulty rating", difficulty)
    return _clamp_open_unit(logistic(learner - difficulty))


def update_rating(
    learner: float,
    difficulty: float,
    correct: bool,
    k_learner: float = DEFAULT_K_LEARNER,
    k_item: float = DEFAULT_K_ITEM,
) -> tuple[float, float]:
    """One Elo-style update; returns (new learner rating, new item difficulty).

    The learner moves by k_learner * (outcome - expected) and the item by
    the same surprise scaled by -k_item, so the two deltas always have
    opposite signs.
    """
    if not k_learner > 0.0:
        raise ConfigError(f"k_learner must be positive, got {k_learner!r}")
    if not k_item > 0.0:
        raise ConfigError(f"k_item must be positive, got {k_item!r}")
    p = predict_correct(learner, difficulty)
    surprise = (1.0 if correct else 0.0) - p
    return learner + k_learner * surprise, difficulty - k_item * surprise


def mastery_score(rating: float) -> float:
    """Map a rating into the open interval (0, 1)."""
    rating = _require_finite("rating", rating)
    return _clamp_open_unit(logistic(rating))


def to_band(
    score: float, thresholds: tuple[float, float, float, float] = DEFAULT_BAND_THRESHOLDS
) -> MasteryBand:
    """Discretise a score in (0, 1) into a band.

    Cells are half-open [lower, upper): a score sitting exactly on a
    threshold belongs to the upper band.
    """
    if not 0.0 < score < 1.0:
        raise ValidationError(f"mastery score must lie in (0, 1), got {score!r}")
    ordinal = 0
    for threshold in thresholds:
        if score >= threshold:
            ordinal += 1
    return MasteryBand(ordinal)


def band_for_rating(
    rating: float, thresholds: tuple[float, float, float, float] = DEFAULT_BAND_THRESHOLDS
) -> MasteryBand:
    return to_band(mastery_score(rating), thresholds)
