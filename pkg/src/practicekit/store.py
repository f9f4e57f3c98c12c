"""Persistent state: exercise bank, append-only attempt log, and the
learner-topic ratings derived from folding that log.

The log is the source of truth. Every mutation appends one JSON line and
updates the in-memory fold; reopening a store replays the log (tolerating
a torn final line after a crash) and must land on identical state, which
``audit`` verifies by recomputing every rating from scratch.
"""

from __future__ import annotations

import json
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO

from .config import EngineConfig
from .errors import NotFoundError, StoreConsistencyError
from .mastery import update_rating
from .models import Attempt, Exercise, LearnerTopicState


def apply_update(
    rating: float, difficulty: float, correct: bool, config: EngineConfig
) -> tuple[float, float]:
    """The store's single update path, shared by writes, replay and audit."""
    new_rating, new_difficulty = update_rating(
        rating, difficulty, correct, config.k_learner, config.k_item
    )
    if not config.adapt_item_difficulty:
        new_difficulty = difficulty
    return new_rating, new_difficulty


@dataclass
class AuditMismatch:
    kind: str  # "learner_topic" or "exercise"
    key: str
    stored: float
    recomputed: float


@dataclass
class AuditReport:
    attempts_replayed: int
    learner_topics_checked: int
    exercises_checked: int
    mismatches: list[AuditMismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


class Store:
    """Bank + attempt log + derived learner-topic states.

    All writes are serialised by ``lock``; callers that need a consistent
    multi-read snapshot should hold it too.
    """

    def __init__(
        self,
        exercises: dict[str, Exercise],
        config: EngineConfig | None = None,
        log_path: str | Path | None = None,
    ):
        self.config = config or EngineConfig()
        self.exercises: dict[str, Exercise] = dict(exercises)
        self.initial_difficulties = {e.id: e.difficulty for e in self.exercises.values()}
        self.states: dict[tuple[str, str], LearnerTopicState] = {}
        self.attempts: list[Attempt] = []
        self._by_learner_topic: dict[tuple[str, str], list[Attempt]] = {}
        self.seq = 0
        self.lock = threading.RLock()
        self._log_path = Path(log_path) if log_path is not None else None
        self._log_file: IO[str] | None = None

    # -- construction ----------------------------------------------------

    @classmethod
    def open(
        cls,
        exercises: dict[str, Exercise],
        config: EngineConfig | None = None,
        log_path: str | Path | None = None,
    ) -> "Store":
        """Build a store and, when the log file already exists, replay it."""
        store = cls(exercises, config, log_path)
        if store._log_path is not None and store._log_path.exists():
            store._replay_file(store._log_path)
        return store

    def _replay_file(self, path: Path) -> None:
        data = path.read_bytes()
        lines = data.split(b"\n")
        # A crash can leave a torn final line; only the last one may be dropped.
        for index, line in enumerate(lines):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError:
                if index == len(lines) - 1:
                    break
                raise StoreConsistencyError(
                    f"{path}: corrupt attempt record on line {index + 1}"
                )
            self._apply_record(record, path, index + 1)

    def _apply_record(self, record: dict, path: Path, lineno: int) -> None:
        try:
            attempt = Attempt(
                seq=int(record["seq"]),
                learner_id=str(record["learner_id"]),
                topic_id=str(record["topic_id"]),
                exercise_id=str(record["exercise_id"]),
                correct=bool(record["correct"]),
                learner_rating_before=float(record["learner_rating_before"]),
                learner_rating_after=float(record["learner_rating_after"]),
                exercise_difficulty_before=float(record["exercise_difficulty_before"]),
                exercise_difficulty_after=float(record["exercise_difficulty_after"]),
                at=float(record.get("at", 0.0)),
                session_id=record.get("session_id"),
                series_id=record.get("series_id"),
                slider=record.get("slider"),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise StoreConsistencyError(f"{path}:{lineno}: bad attempt record: {exc}") from exc

        exercise = self.exercises.get(attempt.exercise_id)
        if exercise is None:
            raise StoreConsistencyError(
                f"{path}:{lineno}: attempt references unknown exercise {attempt.exercise_id!r}"
            )
        state = self.state(attempt.learner_id, attempt.topic_id)
        if attempt.learner_rating_before != state.rating:
            raise StoreConsistencyError(
                f"{path}:{lineno}: learner rating discontinuity for "
                f"{attempt.learner_id}/{attempt.topic_id}"
            )
        if attempt.exercise_difficulty_before != exercise.difficulty:
            raise StoreConsistencyError(
                f"{path}:{lineno}: difficulty discontinuity for {attempt.exercise_id}"
            )
        self._absorb(attempt)

    def _absorb(self, attempt: Attempt) -> None:
        key = (attempt.learner_id, attempt.topic_id)
        old = self.state(*key)
        self.states[key] = LearnerTopicState(
            learner_id=attempt.learner_id,
            topic_id=attempt.topic_id,
            rating=attempt.learner_rating_after,
            attempt_count=old.attempt_count + 1,
        )
        self.exercises[attempt.exercise_id].difficulty = attempt.exercise_difficulty_after
        self.attempts.append(attempt)
        self._by_learner_topic.setdefault(key, []).append(attempt)
        self.seq = max(self.seq, attempt.seq)

    # -- reads -------------------------------------------------------------

    def state(self, learner_id: str, topic_id: str) -> LearnerTopicState:
        key = (learner_id, topic_id)
        if key not in self.states:
            return LearnerTopicState(
                learner_id=learner_id,
                topic_id=topic_id,
                rating=self.config.initial_rating,
                attempt_count=0,
            )
        return self.states[key]

    def attempts_for(self, learner_id: str, topic_id: str) -> list[Attempt]:
        return list(self._by_learner_topic.get((learner_id, topic_id), ()))

    def exercise(self, exercise_id: str) -> Exercise:
        exercise = self.exercises.get(exercise_id)
        if exercise is None:
            raise NotFoundError(f"unknown exercise: {exercise_id!r}")
        return exercise

    def topic_exercises(self, topic_id: str) -> list[Exercise]:
        found = [e for e in self.exercises.values() if e.topic_id == topic_id]
        if not found:
            raise NotFoundError(f"unknown topic: {topic_id!r}")
        return sorted(found, key=lambda e: (e.difficulty, e.id))

    def topic_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for e in self.exercises.values():
            counts[e.topic_id] = counts.get(e.topic_id, 0) + 1
        return counts

    # -- writes ------------------------------------------------------------

    def record_attempt(
        self,
        learner_id: str,
        topic_id: str,
        exercise_id: str,
        correct: bool,
        *,
        session_id: str | None = None,
        series_id: str | None = None,
        slider: float | None = None,
    ) -> Attempt:
        """Grade-agnostic write: apply the rating update and append the log."""
        with self.lock:
            exercise = self.exercise(exercise_id)
            if exercise.topic_id != topic_id:
                raise NotFoundError(
                    f"exercise {exercise_id!r} does not belong to topic {topic_id!r}"
                )
            state = self.state(learner_id, topic_id)
            new_rating, new_difficulty = apply_update(
                state.rating, exercise.difficulty, correct, self.config
            )
            attempt = Attempt(
                seq=self.seq + 1,
                learner_id=learner_id,
                topic_id=topic_id,
                exercise_id=exercise_id,
                correct=correct,
                learner_rating_before=state.rating,
                learner_rating_after=new_rating,
                exercise_difficulty_before=exercise.difficulty,
                exercise_difficulty_after=new_difficulty,
                at=time.time(),
                session_id=session_id,
                series_id=series_id,
                slider=slider,
            )
            self._append_log(attempt)
            self._absorb(attempt)
            return attempt

    def _append_log(self, attempt: Attempt) -> None:
        if self._log_path is None:
            return
        if self._log_file is None:
            self._log_path.parent.mkdir(parents=True, exist_ok=True)
            self._log_file = self._log_path.open("a", encoding="utf-8")
        self._log_file.write(json.dumps(attempt_record(attempt), sort_keys=True) + "\n")
        self._log_file.flush()

    def close(self) -> None:
        if self._log_file is not None:
            self._log_file.close()
            self._log_file = None

    # -- integrity -----------------------------------------------------------

    def audit(self) -> AuditReport:
        """Recompute every learner-topic rating (and item difficulty) by
        folding the full log from initial values; report any mismatch with
        the stored snapshot. Exact float comparison: the fold is the same
        deterministic code path the writes used."""
        with self.lock:
            ratings: dict[tuple[str, str], float] = {}
            difficulties = dict(self.initial_difficulties)
            for attempt in sorted(self.attempts, key=lambda a: a.seq):
                key = (attempt.learner_id, attempt.topic_id)
                rating = ratings.get(key, self.config.initial_rating)
                difficulty = difficulties[attempt.exercise_id]
                rating, difficulty = apply_update(rating, difficulty, attempt.correct, self.config)
                ratings[key] = rating
                difficulties[attempt.exercise_id] = difficulty

            report = AuditReport(
                attempts_replayed=len(self.attempts),
                learner_topics_checked=len(self.states),
                exercises_checked=len(self.exercises),
            )
            for key, state in sorted(self.states.items()):
                recomputed = ratings.get(key, self.config.initial_rating)
                if recomputed != state.rating:
                    report.mismatches.append(
                        AuditMismatch(
                            kind="learner_topic",
                            key=f"{key[0]}/{key[1]}",
                            stored=state.rating,
                            recomputed=recomputed,
                        )
                    )
            for exercise_id in sorted(self.exercises):
                stored = self.exercises[exercise_id].difficulty
                recomputed = difficulties[exercise_id]
                if recomputed != stored:
                    report.mismatches.append(
                        AuditMismatch(
                            kind="exercise",
                            key=exercise_id,
                            stored=stored,
                            recomputed=recomputed,
                        )
                    )
            return report

    def snapshot_bytes(self) -> bytes:
        """Canonical serialisation of all mastery-relevant state; used to
        assert that read paths leave the store byte-identical."""
        with self.lock:
            payload = {
                "seq": self.seq,
                "attempt_count": len(self.attempts),
                "states": {
                    json.dumps([k[0], k[1]]): [s.rating, s.attempt_count]
                    for k, s in self.states.items()
                },
                "difficulties": {e.id: e.difficulty for e in self.exercises.values()},
            }
            return json.dumps(payload, sort_keys=True).encode("utf-8")


def attempt_record(attempt: Attempt) -> dict:
    """Attempt as a JSON-ready dict (the log line format)."""
    return {
        "seq": attempt.seq,
        "at": attempt.at,
        "learner_id": attempt.learner_id,
        "topic_id": attempt.topic_id,
        "exercise_id": attempt.exercise_id,
        "correct": attempt.correct,
        "learner_rating_before": attempt.learner_rating_before,
        "learner_rating_after": attempt.learner_rating_after,
        "exercise_difficulty_before": attempt.exercise_difficulty_before,
        "exercise_difficulty_after": attempt.exercise_difficulty_after,
        "session_id": attempt.session_id,
        "series_id": attempt.series_id,
        "slider": attempt.slider,
    }
