"""Plain record types shared across the engine."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import ValidationError


@dataclass
class Exercise:
    """One bank item. ``difficulty`` is the current rating and may adapt
    as learners attempt the item; the bank file holds the initial value."""

    id: str
    topic_id: str
    difficulty: float
    prompt: str
    answer_key: str

    def __post_init__(self) -> None:
        if not self.id:
            raise ValidationError("exercise id must be non-empty")
        if not self.topic_id:
            raise ValidationError(f"exercise {self.id!r}: topic_id must be non-empty")
        self.difficulty = float(self.difficulty)
        if not math.isfinite(self.difficulty):
            raise ValidationError(f"exercise {self.id!r}: difficulty must be finite")


@dataclass(frozen=True)
class Attempt:
    """One graded answer, with the rating transition it caused.

    ``seq`` is the store-wide monotonic event time; ``at`` is wall-clock
    and informational only.
    """

    seq: int
    learner_id: str
    topic_id: str
    exercise_id: str
    correct: bool
    learner_rating_before: float
    learner_rating_after: float
    exercise_difficulty_before: float
    exercise_difficulty_after: float
    at: float = 0.0
    session_id: str | None = None
    series_id: str | None = None
    slider: float | None = None


@dataclass(frozen=True)
class LearnerTopicState:
    """Snapshot of one learner's standing in one topic: the rating is the
    fold of update_rating over that learner-topic's attempt log."""

    learner_id: str
    topic_id: str
    rating: float
    attempt_count: int = 0


@dataclass(frozen=True)
class SeriesPlan:
    """Three chosen exercises plus the slider position that produced them.

    ``exercise_ids`` is ordered by ascending difficulty (easy warm-up first).
    """

    series_id: str
    learner_id: str
    topic_id: str
    slider: float
    exercise_ids: tuple[str, str, str]
    target_difficulty: float
    created_at: float = 0.0


class Variant(str, enum.Enum):
    """Which explanation accompanies the difficulty control in a session."""

    WHAT_IF = "what_if"
    FEEDBACK = "feedback"
    SLIDER_ONLY = "slider_only"
    NONE = "none"


class Phase(str, enum.Enum):
    CHOOSING_DIFFICULTY = "choosing_difficulty"
    PRACTISING = "practising"
    COMPLETED = "completed"


@dataclass
class Session:
    """One pass through the practice cycle: steer difficulty, commit a
    series, answer its three exercises."""

    session_id: str
    learner_id: str
    topic_id: str
    variant: Variant
    phase: Phase = Phase.CHOOSING_DIFFICULTY
    plan: SeriesPlan | None = None
    last_previewed_slider: float | None = None
    last_previewed_plan: SeriesPlan | None = None
    answered: dict[str, bool] = field(default_factory=dict)
    created_at: float = 0.0
    feedback_seed: int = 0
