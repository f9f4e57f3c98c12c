"""Pydantic request/response models for the HTTP API."""

from __future__ import annotations

from pydantic import BaseModel, Field


class ErrorBody(BaseModel):
    code: str
    message: str
    detail: dict = Field(default_factory=dict)


class TopicOut(BaseModel):
    topic_id: str
    exercise_count: int
    practice_ready: bool


class SessionCreate(BaseModel):
    learner_id: str
    topic_id: str
    variant: str = "what_if"


class ExerciseOut(BaseModel):
    id: str
    prompt: str
    difficulty: float


class PlanOut(BaseModel):
    series_id: str
    slider: float
    target_difficulty: float
    exercise_ids: list[str]
    exercises: list[ExerciseOut]


class SessionOut(BaseModel):
    session_id: str
    learner_id: str
    topic_id: str
    variant: str
    phase: str
    plan: PlanOut | None = None
    answered: dict[str, bool] = Field(default_factory=dict)


class PreviewIn(BaseModel):
    slider: float | None = None


class ProjectionOut(BaseModel):
    current_rating: float
    projected_rating: float
    current_score: float
    projected_score: float
    current_band: str
    projected_band: str
    slider: float
    series_exercise_ids: list[str]


class SentenceOut(BaseModel):
    bucket_index: int
    sentence_index: int
    text: str


class PreviewOut(BaseModel):
    session_id: str
    variant: str
    slider: float
    plan: PlanOut
    projection: ProjectionOut | None = None
    sentence: SentenceOut | None = None


class AnswerIn(BaseModel):
    exercise_id: str
    answer: str


class AnswerOut(BaseModel):
    session_id: str
    exercise_id: str
    correct: bool
    rating: float
    score: float
    band: str
    phase: str
    answered_count: int


class MasteryOut(BaseModel):
    learner_id: str
    topic_id: str
    rating: float
    score: float
    band: str
    attempt_count: int


class WhyItemOut(BaseModel):
    exercise_id: str
    difficulty: float
    recommended: bool
    attempt_count: int
    last_correct: bool | None = None


class WhyOut(BaseModel):
    topic_id: str
    learner_band: str
    learner_score: float
    items: list[WhyItemOut]


class AuditMismatchOut(BaseModel):
    kind: str
    key: str
    stored: float
    recomputed: float


class AuditOut(BaseModel):
    ok: bool
    attempts_replayed: int
    learner_topics_checked: int
    exercises_checked: int
    mismatches: list[AuditMismatchOut]


class BandOut(BaseModel):
    ordinal: int
    label: str


class MetaOut(BaseModel):
    slider_grid: list[float]
    band_thresholds: list[float]
    bands: list[BandOut]
    variants: list[str]
