"""Shared test fixtures: in-memory banks, stores and services."""

from __future__ import annotations

import pytest

from practicekit.config import EngineConfig
from practicekit.models import Exercise
from practicekit.service import PracticeService
from practicekit.store import Store


def make_bank(
    difficulties, topic_id: str = "algebra", prefix: str = "ex", answer_key: str = "42"
) -> dict[str, Exercise]:
    """Bank with the given difficulties; ids are zero-padded in input order."""
    bank = {}
    for i, difficulty in enumerate(difficulties):
        exercise = Exercise(
            id=f"{prefix}-{i:03d}",
            topic_id=topic_id,
            difficulty=float(difficulty),
            prompt=f"question {i}",
            answer_key=answer_key,
        )
        bank[exercise.id] = exercise
    return bank


@pytest.fixture
def bank5() -> dict[str, Exercise]:
    return make_bank([-2.0, -1.0, 0.0, 1.0, 2.0])


@pytest.fixture
def service5(bank5) -> PracticeService:
    return PracticeService(Store(bank5, EngineConfig()))


def make_service(difficulties, config: EngineConfig | None = None, **bank_kwargs) -> PracticeService:
    return PracticeService(Store(make_bank(difficulties, **bank_kwargs), config or EngineConfig()))
