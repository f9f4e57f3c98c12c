"""Series composition: map the slider to a target difficulty, then pick the
three topic exercises whose difficulties sit closest to that target.

Composition is read-only and pure: it never touches ratings, and the same
store state plus slider always yields the same series.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence

from .config import EngineConfig
from .errors import ConfigError, InsufficientBankError, NotFoundError
from .models import Attempt, Exercise, LearnerTopicState, SeriesPlan
from .slider import snap, tenths

SERIES_SIZE = 3


def target_difficulty(learner: float, slider: float, beta: float, delta: float) -> float:
    """Difficulty the series should aim for.

    Affine in the slider: learner - delta + beta * (slider - 0.5). At the
    midpoint the target sits ``delta`` below the learner's rating, which
    with the defaults puts predicted success near 0.70; ``beta`` is the
    rating span swept by the full grid.
    """
    if not beta > 0.0:
        raise ConfigError(f"beta must be positive, got {beta!r}")
    return learner - delta + beta * (snap(slider) - 0.5)


def compose_series(
    state: LearnerTopicState,
    slider: float,
    bank: Iterable[Exercise],
    history: Sequence[Attempt],
    config: EngineConfig = EngineConfig(),
    *,
    series_id: str | None = None,
    created_at: float = 0.0,
) -> SeriesPlan:
    """Pick the three exercises for one practice series.

    Ranking is by |difficulty - target|, ties broken by fewer prior
    attempts then smaller id. Exercises the learner met in their last
    ``config.recency_window`` attempts are preferred out (the filter is
    dropped when it would leave fewer than three candidates). The series
    itself is ordered by ascending difficulty.
    """
    slider = snap(slider)
    candidates = [e for e in bank if e.topic_id == state.topic_id]
    if not candidates:
        raise NotFoundError(f"unknown topic: {state.topic_id!r}")
    if len(candidates) < SERIES_SIZE:
        raise InsufficientBankError(
            f"topic {state.topic_id!r} has {len(candidates)} exercises; "
            f"a series needs {SERIES_SIZE}",
            detail={"topic_id": state.topic_id, "available": len(candidates)},
        )

    relevant = [
        a
        for a in history
        if a.learner_id == state.learner_id and a.topic_id == state.topic_id
    ]
    relevant.sort(key=lambda a: a.seq)
    attempt_counts = Counter(a.exercise_id for a in relevant)
    recent_ids = {a.exercise_id for a in relevant[-config.recency_window :]} if config.recency_window else set()

    fresh = [e for e in candidates if e.id not in recent_ids]
    if len(fresh) >= SERIES_SIZE:
        candidates = fresh

    target = target_difficulty(state.rating, slider, config.beta, config.delta)
    candidates.sort(key=lambda e: (abs(e.difficulty - target), attempt_counts[e.id], e.id))
    chosen = sorted(candidates[:SERIES_SIZE], key=lambda e: (e.difficulty, e.id))

    if series_id is None:
        series_id = f"series-{state.learner_id}-{state.topic_id}-s{tenths(slider):02d}"
    return SeriesPlan(
        series_id=series_id,
        learner_id=state.learner_id,
        topic_id=state.topic_id,
        slider=slider,
        exercise_ids=tuple(e.id for e in chosen),
        target_difficulty=target,
        created_at=created_at,
    )
