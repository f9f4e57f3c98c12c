"""practicekit: adaptive exercise practice with learner-steerable difficulty.

Learners pick a topic, steer the difficulty of a three-exercise series on
an 11-step slider, and see either a live what-if mastery projection or a
motivational sentence before practising. A teacher view explains where
the recommended exercises sit among the topic's difficulty range.
"""

from .config import EngineConfig, load_config
from .errors import PracticeError
from .explain import build_why, project_what_if
from .feedback import bucket_for, pick_sentence
from .mastery import (
    MasteryBand,
    band_for_rating,
    mastery_score,
    predict_correct,
    to_band,
    update_rating,
)
from .models import Attempt, Exercise, LearnerTopicState, Phase, SeriesPlan, Variant
from .recommender import compose_series, target_difficulty
from .service import PracticeService
from .store import Store

__version__ = "0.1.0"

__all__ = [
    "Attempt",
    "EngineConfig",
    "Exercise",
    "LearnerTopicState",
    "MasteryBand",
    "Phase",
    "PracticeError",
    "PracticeService",
    "SeriesPlan",
    "Store",
    "Variant",
    "band_for_rating",
    "bucket_for",
    "build_why",
    "compose_series",
    "load_config",
    "mastery_score",
    "pick_sentence",
    "predict_correct",
    "project_what_if",
    "target_difficulty",
    "to_band",
    "update_rating",
    "__version__",
]
