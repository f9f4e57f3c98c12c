"""Explanation payloads: the learner-facing what-if projection and the
teacher-facing why view.

Both are computed from snapshots and never write anything back. The
what-if answers "where would my mastery land if I solved the whole
series correctly"; the why view lays the topic's exercises out in rising
difficulty with the recommended ones flagged.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .config import EngineConfig
from .errors import NotFoundError, ValidationError
from .mastery import MasteryBand, mastery_score, to_band, update_rating
from .models import Attempt, Exercise, LearnerTopicState, SeriesPlan


@dataclass(frozen=True)
class WhatIfProjection:
    """Current vs. projected mastery under the all-correct counterfactual.

    The projected score is always strictly above the current one, but the
    band may stay the same — one series does not guarantee a level-up.
    """

    current_rating: float
    projected_rating: float
    current_score: float
    projected_score: float
    current_band: MasteryBand
    projected_band: MasteryBand
    slider: float
    series_exercise_ids: tuple[str, str, str]


@dataclass(frozen=True)
class WhyItem:
    exercise_id: str
    difficulty: float
    recommended: bool
    attempt_count: int
    last_correct: bool | None


@dataclass(frozen=True)
class WhyPayload:
    topic_id: str
    learner_band: MasteryBand
    learner_score: float
    items: tuple[WhyItem, ...]


def project_what_if(
    state: LearnerTopicState,
    plan: SeriesPlan,
    bank: Mapping[str, Exercise],
    k_learner: float,
    thresholds: tuple[float, float, float, float] = EngineConfig().band_thresholds,
) -> WhatIfProjection:
    """Fold the learner-side rating update over the planned series with
    every answer counted correct, item difficulties frozen at plan time."""
    if plan.learner_id != state.learner_id or plan.topic_id != state.topic_id:
        raise ValidationError(
            "plan does not belong to this learner-topic state",
            detail={
                "plan": {"learner_id": plan.learner_id, "topic_id": plan.topic_id},
                "state": {"learner_id": state.learner_id, "topic_id": state.topic_id},
            },
        )
    difficulties = []
    for exercise_id in plan.exercise_ids:
        exercise = bank.get(exercise_id)
        if exercise is None:
            raise NotFoundError(f"unknown exercise in plan: {exercise_id!r}")
        difficulties.append(exercise.difficulty)

    rating = state.rating
    for difficulty in difficulties:
        rating, _ = update_rating(rating, difficulty, True, k_learner=k_learner)

    current_score = mastery_score(state.rating)
    projected_score = mastery_score(rating)
    return WhatIfProjection(
        current_rating=state.rating,
        projected_rating=rating,
        current_score=current_score,
        projected_score=projected_score,
        current_band=to_band(current_score, thresholds),
        projected_band=to_band(projected_score, thresholds),
        slider=plan.slider,
        series_exercise_ids=plan.exercise_ids,
    )


def build_why(
    state: LearnerTopicState,
    plan: SeriesPlan | None,
    bank: Sequence[Exercise],
    history: Sequence[Attempt],
    thresholds: tuple[float, float, float, float] = EngineConfig().band_thresholds,
) -> WhyPayload:
    """One item per topic exercise, sorted by rising difficulty, with the
    learner's per-exercise attempt tally and the current plan flagged."""
    topic_exercises = [e for e in bank if e.topic_id == state.topic_id]
    if not topic_exercises:
        raise NotFoundError(f"unknown topic: {state.topic_id!r}")

    recommended = set(plan.exercise_ids) if plan is not None else set()
    counts: dict[str, int] = {}
    last: dict[str, bool] = {}
    for attempt in sorted(history, key=lambda a: a.seq):
        if attempt.learner_id != state.learner_id or attempt.topic_id != state.topic_id:
            continue
        counts[attempt.exercise_id] = counts.get(attempt.exercise_id, 0) + 1
        last[attempt.exercise_id] = attempt.correct

    items = tuple(
        WhyItem(
            exercise_id=e.id,
            difficulty=e.difficulty,
            recommended=e.id in recommended,
            attempt_count=counts.get(e.id, 0),
            last_correct=last.get(e.id),
        )
        for e in sorted(topic_exercises, key=lambda e: (e.difficulty, e.id))
    )
    score = mastery_score(state.rating)
    return WhyPayload(
        topic_id=state.topic_id,
        learner_band=to_band(score, thresholds),
        learner_score=score,
        items=items,
    )
