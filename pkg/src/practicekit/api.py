"""FastAPI wrapper around PracticeService.

Every domain failure surfaces as a JSON body with a stable machine-
readable ``code`` (slider errors additionally list the legal grid), so
clients never parse prose.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import schemas
from .errors import PracticeError
from .explain import WhatIfProjection, WhyPayload
from .feedback import FeedbackSentence
from .mastery import MasteryBand
from .models import SeriesPlan, Session, Variant
from .service import AnswerResult, MasteryInfo, PracticeService, PreviewResult
from .slider import GRID


def create_app(service: PracticeService) -> FastAPI:
    app = FastAPI(title="practicekit", version="0.1.0")
    app.state.service = service
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(PracticeError)
    async def practice_error_handler(_: Request, exc: PracticeError) -> JSONResponse:
        return JSONResponse(status_code=exc.http_status, content=exc.payload())

    @app.get("/topics", response_model=list[schemas.TopicOut])
    def list_topics():
        return [
            schemas.TopicOut(
                topic_id=t.topic_id,
                exercise_count=t.exercise_count,
                practice_ready=t.practice_ready,
            )
            for t in service.topics()
        ]

    @app.get("/meta", response_model=schemas.MetaOut)
    def meta():
        return schemas.MetaOut(
            slider_grid=list(GRID),
            band_thresholds=list(service.config.band_thresholds),
            bands=[schemas.BandOut(ordinal=int(b), label=b.label) for b in MasteryBand],
            variants=[v.value for v in Variant],
        )

    @app.post("/sessions", response_model=schemas.SessionOut, status_code=201)
    def start_session(body: schemas.SessionCreate):
        session = service.start_session(body.learner_id, body.topic_id, body.variant)
        return _session_out(service, session)

    @app.get("/sessions/{session_id}", response_model=schemas.SessionOut)
    def get_session(session_id: str):
        return _session_out(service, service.get_session(session_id))

    @app.post("/sessions/{session_id}/preview", response_model=schemas.PreviewOut)
    def preview(session_id: str, body: schemas.PreviewIn | None = None):
        slider = body.slider if body is not None else None
        return _preview_out(service, service.preview(session_id, slider))

    @app.post("/sessions/{session_id}/commit", response_model=schemas.SessionOut)
    def commit(session_id: str):
        return _session_out(service, service.commit_series(session_id))

    @app.post("/sessions/{session_id}/answers", response_model=schemas.AnswerOut)
    def submit_answer(session_id: str, body: schemas.AnswerIn):
        return _answer_out(service.submit_answer(session_id, body.exercise_id, body.answer))

    @app.get(
        "/learners/{learner_id}/topics/{topic_id}/mastery",
        response_model=schemas.MasteryOut,
    )
    def mastery(learner_id: str, topic_id: str):
        return _mastery_out(service.mastery(learner_id, topic_id))

    @app.get("/teacher/why", response_model=schemas.WhyOut)
    def teacher_why(learner: str, topic: str):
        return _why_out(service.teacher_why(learner, topic))

    @app.get("/admin/audit", response_model=schemas.AuditOut)
    def audit():
        report = service.audit()
        return schemas.AuditOut(
            ok=report.ok,
            attempts_replayed=report.attempts_replayed,
            learner_topics_checked=report.learner_topics_checked,
            exercises_checked=report.exercises_checked,
            mismatches=[
                schemas.AuditMismatchOut(
                    kind=m.kind, key=m.key, stored=m.stored, recomputed=m.recomputed
                )
                for m in report.mismatches
            ],
        )

    return app


def _plan_out(service: PracticeService, plan: SeriesPlan) -> schemas.PlanOut:
    exercises = []
    with service.store.lock:
        for exercise_id in plan.exercise_ids:
            e = service.store.exercise(exercise_id)
            exercises.append(
                schemas.ExerciseOut(id=e.id, prompt=e.prompt, difficulty=e.difficulty)
            )
    return schemas.PlanOut(
        series_id=plan.series_id,
        slider=plan.slider,
        target_difficulty=plan.target_difficulty,
        exercise_ids=list(plan.exercise_ids),
        exercises=exercises,
    )


def _session_out(service: PracticeService, session: Session) -> schemas.SessionOut:
    return schemas.SessionOut(
        session_id=session.session_id,
        learner_id=session.learner_id,
        topic_id=session.topic_id,
        variant=session.variant.value,
        phase=session.phase.value,
        plan=_plan_out(service, session.plan) if session.plan is not None else None,
        answered=dict(session.answered),
    )


def _projection_out(projection: WhatIfProjection) -> schemas.ProjectionOut:
    return schemas.ProjectionOut(
        current_rating=projection.current_rating,
        projected_rating=projection.projected_rating,
        current_score=projection.current_score,
        projected_score=projection.projected_score,
        current_band=projection.current_band.label,
        projected_band=projection.projected_band.label,
        slider=projection.slider,
        series_exercise_ids=list(projection.series_exercise_ids),
    )


def _sentence_out(sentence: FeedbackSentence) -> schemas.SentenceOut:
    return schemas.SentenceOut(
        bucket_index=sentence.bucket_index,
        sentence_index=sentence.sentence_index,
        text=sentence.text,
    )


def _preview_out(service: PracticeService, result: PreviewResult) -> schemas.PreviewOut:
    return schemas.PreviewOut(
        session_id=result.session_id,
        variant=result.variant.value,
        slider=result.slider,
        plan=_plan_out(service, result.plan),
        projection=_projection_out(result.projection) if result.projection else None,
        sentence=_sentence_out(result.sentence) if result.sentence else None,
    )


def _answer_out(result: AnswerResult) -> schemas.AnswerOut:
    return schemas.AnswerOut(
        session_id=result.session_id,
        exercise_id=result.exercise_id,
        correct=result.correct,
        rating=result.rating,
        score=result.score,
        band=result.band.label,
        phase=result.phase.value,
        answered_count=result.answered_count,
    )


def _mastery_out(info: MasteryInfo) -> schemas.MasteryOut:
    return schemas.MasteryOut(
        learner_id=info.learner_id,
        topic_id=info.topic_id,
        rating=info.rating,
        score=info.score,
        band=info.band.label,
        attempt_count=info.attempt_count,
    )


def _why_out(payload: WhyPayload) -> schemas.WhyOut:
    return schemas.WhyOut(
        topic_id=payload.topic_id,
        learner_band=payload.learner_band.label,
        learner_score=payload.learner_score,
        items=[
            schemas.WhyItemOut(
                exercise_id=item.exercise_id,
                difficulty=item.difficulty,
                recommended=item.recommended,
                attempt_count=item.attempt_count,
                last_correct=item.last_correct,
            )
            for item in payload.items
        ],
    )
