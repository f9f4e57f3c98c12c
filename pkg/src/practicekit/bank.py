"""Exercise bank file handling.

A bank is a line-delimited file: one JSON record per exercise with keys
``id``, ``topic_id``, ``difficulty``, ``prompt`` and ``answer_key``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import BankFormatError, ValidationError
from .models import Exercise

_REQUIRED_KEYS = ("id", "topic_id", "difficulty", "prompt", "answer_key")


def parse_bank(text: str, source: str = "<bank>") -> dict[str, Exercise]:
    """Parse bank file content into exercises keyed by id.

    Raises BankFormatError naming the offending line for malformed JSON,
    missing keys, non-finite difficulties and duplicate ids.
    """
    exercises: dict[str, Exercise] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise BankFormatError(f"{source}:{lineno}: invalid JSON: {exc}") from exc
        if not isinstance(record, dict):
            raise BankFormatError(f"{source}:{lineno}: expected a JSON object")
        missing = [key for key in _REQUIRED_KEYS if key not in record]
        if missing:
            raise BankFormatError(f"{source}:{lineno}: missing keys: {', '.join(missing)}")
        try:
            difficulty = float(record["difficulty"])
        except (TypeError, ValueError):
            difficulty = math.nan
        if not math.isfinite(difficulty):
            raise BankFormatError(
                f"{source}:{lineno}: difficulty must be a finite number, "
                f"got {record['difficulty']!r}"
            )
        exercise_id = str(record["id"])
        if exercise_id in exercises:
            raise BankFormatError(f"{source}:{lineno}: duplicate exercise id {exercise_id!r}")
        try:
            exercises[exercise_id] = Exercise(
                id=exercise_id,
                topic_id=str(record["topic_id"]),
                difficulty=difficulty,
                prompt=str(record["prompt"]),
                answer_key=str(record["answer_key"]),
            )
        except ValidationError as exc:
            raise BankFormatError(f"{source}:{lineno}: {exc.message}") from exc
    return exercises


def load_bank(path: str | Path) -> dict[str, Exercise]:
    path = Path(path)
    return parse_bank(path.read_text(encoding="utf-8"), source=str(path))


def dump_bank(exercises: dict[str, Exercise] | list[Exercise]) -> str:
    """Render exercises back to the line-delimited format (initial state)."""
    items = exercises.values() if isinstance(exercises, dict) else exercises
    lines = []
    for e in items:
        lines.append(
            json.dumps(
                {
                    "id": e.id,
                    "topic_id": e.topic_id,
                    "difficulty": e.difficulty,
                    "prompt": e.prompt,
                    "answer_key": e.answer_key,
                },
                ensure_ascii=False,
            )
        )
    return "\n".join(lines) + ("\n" if lines else "")


@dataclass
class IngestReport:
    path: str
    exercise_count: int
    topics: dict[str, int] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)


def ingest_bank(path: str | Path) -> IngestReport:
    """Validate a bank file and summarise it; raises on any format error."""
    path = Path(path)
    exercises = load_bank(path)
    topics: dict[str, int] = {}
    for e in exercises.values():
        topics[e.topic_id] = topics.get(e.topic_id, 0) + 1
    report = IngestReport(path=str(path), exercise_count=len(exercises), topics=topics)
    if not exercises:
        report.warnings.append("bank file is empty")
    for topic_id, count in sorted(topics.items()):
        if count < 3:
            report.warnings.append(
                f"topic {topic_id!r} has only {count} exercise(s); series need 3"
            )
    return report
