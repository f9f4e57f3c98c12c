"""The practice cycle as a session state machine over a Store.

Sessions move ChoosingDifficulty -> Practising -> Completed. While
choosing, previews recompute the series and its explanation for any
slider position without touching mastery state; committing freezes the
latest previewed plan; answering updates ratings one exercise at a time.
Only submit_answer ever mutates a mastery score.
"""

from __future__ import annotations

import hashlib
import threading
import time
import uuid
from dataclasses import dataclass

from .config import EngineConfig
from .errors import (
    AlreadyAnsweredError,
    InsufficientBankError,
    NotFoundError,
    ValidationError,
    WrongPhaseError,
)
from .explain import WhatIfProjection, WhyPayload, build_why, project_what_if
from .feedback import FeedbackSentence, load_catalog, pick_sentence
from .mastery import MasteryBand, mastery_score, to_band
from .models import Phase, SeriesPlan, Session, Variant
from .recommender import SERIES_SIZE, compose_series
from .slider import snap, tenths
from .store import AuditReport, Store


@dataclass(frozen=True)
class TopicInfo:
    topic_id: str
    exercise_count: int

    @property
    def practice_ready(self) -> bool:
        return self.exercise_count >= SERIES_SIZE


@dataclass(frozen=True)
class MasteryInfo:
    learner_id: str
    topic_id: str
    rating: float
    score: float
    band: MasteryBand
    attempt_count: int


@dataclass(frozen=True)
class PreviewResult:
    session_id: str
    variant: Variant
    slider: float
    plan: SeriesPlan
    projection: WhatIfProjection | None = None
    sentence: FeedbackSentence | None = None


@dataclass(frozen=True)
class AnswerResult:
    session_id: str
    exercise_id: str
    correct: bool
    rating: float
    score: float
    band: MasteryBand
    phase: Phase
    answered_count: int


def normalise_answer(text: str) -> str:
    """Grading normalisation: trim surrounding whitespace and case-fold."""
    return text.strip().casefold()


class PracticeService:
    """Owns sessions and mediates every read/write against the store."""

    def __init__(self, store: Store, catalog: list[FeedbackSentence] | None = None):
        self.store = store
        self.config: EngineConfig = store.config
        self.catalog = catalog if catalog is not None else load_catalog()
        self.sessions: dict[str, Session] = {}
        self._latest_plans: dict[tuple[str, str], SeriesPlan] = {}
        self._lock = threading.RLock()

    # -- session lifecycle -------------------------------------------------

    def start_session(self, learner_id: str, topic_id: str, variant: Variant | str) -> Session:
        try:
            variant = Variant(variant)
        except ValueError:
            raise ValidationError(
                f"unknown explanation variant: {variant!r}",
                detail={"legal_variants": [v.value for v in Variant]},
            ) from None
        with self.store.lock:
            available = len(self.store.topic_exercises(topic_id))
        if available < SERIES_SIZE:
            raise InsufficientBankError(
                f"topic {topic_id!r} has {available} exercises; a series needs {SERIES_SIZE}",
                detail={"topic_id": topic_id, "available": available},
            )
        session = Session(
            session_id=f"sess-{uuid.uuid4().hex}",
            learner_id=learner_id,
            topic_id=topic_id,
            variant=variant,
            created_at=time.time(),
        )
        session.feedback_seed = _derive_seed(self.config.seed, session.session_id)
        with self._lock:
            self.sessions[session.session_id] = session
        return session

    def get_session(self, session_id: str) -> Session:
        with self._lock:
            session = self.sessions.get(session_id)
        if session is None:
            raise NotFoundError(f"unknown session: {session_id!r}")
        return session

    def preview(self, session_id: str, slider: float | None = None) -> PreviewResult:
        """Recompute the series and explanation for a slider position.

        Idempotent and read-only against mastery state; the session only
        remembers the latest previewed slider and plan so commit can
        freeze them.
        """
        session = self.get_session(session_id)
        if session.phase is not Phase.CHOOSING_DIFFICULTY:
            raise WrongPhaseError(
                f"preview requires phase {Phase.CHOOSING_DIFFICULTY.value}, "
                f"session is {session.phase.value}",
                detail={"phase": session.phase.value},
            )
        effective = self._resolve_slider(session, slider)

        with self.store.lock:
            state = self.store.state(session.learner_id, session.topic_id)
            history = self.store.attempts_for(session.learner_id, session.topic_id)
            plan = compose_series(
                state,
                effective,
                self.store.topic_exercises(session.topic_id),
                history,
                self.config,
                series_id=f"{session.session_id}-s{tenths(effective):02d}",
                created_at=session.created_at,
            )
            projection = None
            sentence = None
            if session.variant is Variant.WHAT_IF:
                projection = project_what_if(
                    state,
                    plan,
                    self.store.exercises,
                    self.config.k_learner,
                    self.config.band_thresholds,
                )
            elif session.variant is Variant.FEEDBACK:
                sentence = pick_sentence(effective, session.feedback_seed, self.catalog)

        with self._lock:
            # a concurrent commit may have raced this preview; the stale
            # result must not clobber the frozen plan
            if session.phase is not Phase.CHOOSING_DIFFICULTY:
                raise WrongPhaseError(
                    "session left the choosing phase while the preview was computed",
                    detail={"phase": session.phase.value},
                )
            session.last_previewed_slider = effective
            session.last_previewed_plan = plan
            self._latest_plans[(session.learner_id, session.topic_id)] = plan
        return PreviewResult(
            session_id=session.session_id,
            variant=session.variant,
            slider=effective,
            plan=plan,
            projection=projection,
            sentence=sentence,
        )

    def _resolve_slider(self, session: Session, slider: float | None) -> float:
        if session.variant is Variant.NONE:
            # Announcement-only sessions have no difficulty control; the
            # series is always compiled at the midpoint.
            if slider is not None and snap(slider) != 0.5:
                raise ValidationError(
                    "this session variant offers no difficulty control",
                    detail={"variant": session.variant.value},
                )
            return 0.5
        if slider is None:
            raise ValidationError(
                "slider value required",
                detail={"variant": session.variant.value},
            )
        return snap(slider)

    def commit_series(self, session_id: str) -> Session:
        """Freeze the latest previewed plan and move to Practising."""
        session = self.get_session(session_id)
        with self._lock:
            if session.phase is not Phase.CHOOSING_DIFFICULTY:
                raise WrongPhaseError(
                    f"commit requires phase {Phase.CHOOSING_DIFFICULTY.value}, "
                    f"session is {session.phase.value}",
                    detail={"phase": session.phase.value},
                )
            if session.last_previewed_plan is None:
                raise WrongPhaseError(
                    "nothing to commit: no preview has been made in this session"
                )
            session.plan = session.last_previewed_plan
            session.phase = Phase.PRACTISING
            self._latest_plans[(session.learner_id, session.topic_id)] = session.plan
        return session

    def submit_answer(self, session_id: str, exercise_id: str, answer_text: str) -> AnswerResult:
        """Grade one answer, persist the attempt, and update both ratings."""
        session = self.get_session(session_id)
        with self._lock:
            if session.phase is not Phase.PRACTISING:
                raise WrongPhaseError(
                    f"answers require phase {Phase.PRACTISING.value}, "
                    f"session is {session.phase.value}",
                    detail={"phase": session.phase.value},
                )
            assert session.plan is not None
            if exercise_id not in session.plan.exercise_ids:
                raise ValidationError(
                    f"exercise {exercise_id!r} is not part of this session's series",
                    detail={"series": list(session.plan.exercise_ids)},
                )
            if exercise_id in session.answered:
                raise AlreadyAnsweredError(
                    f"exercise {exercise_id!r} was already answered in this session"
                )

            with self.store.lock:
                exercise = self.store.exercise(exercise_id)
                correct = normalise_answer(answer_text) == normalise_answer(exercise.answer_key)
                self.store.record_attempt(
                    session.learner_id,
                    session.topic_id,
                    exercise_id,
                    correct,
                    session_id=session.session_id,
                    series_id=session.plan.series_id,
                    slider=session.plan.slider,
                )
                state = self.store.state(session.learner_id, session.topic_id)

            session.answered[exercise_id] = correct
            if len(session.answered) == SERIES_SIZE:
                session.phase = Phase.COMPLETED

            score = mastery_score(state.rating)
            return AnswerResult(
                session_id=session.session_id,
                exercise_id=exercise_id,
                correct=correct,
                rating=state.rating,
                score=score,
                band=to_band(score, self.config.band_thresholds),
                phase=session.phase,
                answered_count=len(session.answered),
            )

    # -- read-only views -----------------------------------------------------

    def topics(self) -> list[TopicInfo]:
        with self.store.lock:
            counts = self.store.topic_counts()
        return [TopicInfo(topic_id, count) for topic_id, count in sorted(counts.items())]

    def mastery(self, learner_id: str, topic_id: str) -> MasteryInfo:
        with self.store.lock:
            self.store.topic_exercises(topic_id)  # not-found check
            state = self.store.state(learner_id, topic_id)
        score = mastery_score(state.rating)
        return MasteryInfo(
            learner_id=learner_id,
            topic_id=topic_id,
            rating=state.rating,
            score=score,
            band=to_band(score, self.config.band_thresholds),
            attempt_count=state.attempt_count,
        )

    def teacher_why(self, learner_id: str, topic_id: str) -> WhyPayload:
        """Why view for teachers: the learner's latest plan (previewed or
        committed) flags the recommended exercises; none flagged if the
        learner never planned a series in this topic."""
        with self._lock:
            plan = self._latest_plans.get((learner_id, topic_id))
        with self.store.lock:
            exercises = self.store.topic_exercises(topic_id)
            state = self.store.state(learner_id, topic_id)
            history = self.store.attempts_for(learner_id, topic_id)
            return build_why(state, plan, exercises, history, self.config.band_thresholds)

    def audit(self) -> AuditReport:
        return self.store.audit()


def _derive_seed(base_seed: int, session_id: str) -> int:
    digest = hashlib.sha256(f"{base_seed}:{session_id}".encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big")
