"""Motivational wise-feedback sentences keyed to slider subintervals.

The catalog ships as data (``data/wise_feedback.jsonl``, one record per
sentence with its bucket bounds) so the texts can be swapped or translated
without touching code. Five buckets cover the slider: [0.0,0.2), [0.2,0.4),
[0.4,0.6), [0.6,0.8), [0.8,1.0] — half-open, boundary values go up.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import BankFormatError
from .slider import tenths

BUCKET_COUNT = 5
SENTENCES_PER_BUCKET = 3


@dataclass(frozen=True)
class FeedbackSentence:
    bucket_index: int
    sentence_index: int
    text: str


def default_catalog_bytes() -> bytes:
    return (resources.files("practicekit") / "data" / "wise_feedback.jsonl").read_bytes()


def catalog_sha256() -> str:
    return hashlib.sha256(default_catalog_bytes()).hexdigest()


def load_catalog(path: str | Path | None = None) -> list[FeedbackSentence]:
    """Load and validate a sentence catalog; default is the bundled one."""
    if path is None:
        raw = default_catalog_bytes().decode("utf-8")
    else:
        raw = Path(path).read_text(encoding="utf-8")

    sentences: dict[tuple[int, int], str] = {}
    for lineno, line in enumerate(raw.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            bucket = int(rec["bucket"])
            index = int(rec["sentence"])
            text = rec["text"]
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise BankFormatError(f"feedback catalog line {lineno}: {exc}") from exc
        if not 0 <= bucket < BUCKET_COUNT:
            raise BankFormatError(f"feedback catalog line {lineno}: bucket {bucket} out of range")
        if not 0 <= index < SENTENCES_PER_BUCKET:
            raise BankFormatError(f"feedback catalog line {lineno}: sentence index {index} out of range")
        if (bucket, index) in sentences:
            raise BankFormatError(f"feedback catalog line {lineno}: duplicate entry {bucket}/{index}")
        sentences[(bucket, index)] = str(text)

    expected = BUCKET_COUNT * SENTENCES_PER_BUCKET
    if len(sentences) != expected:
        raise BankFormatError(
            f"feedback catalog must hold {expected} sentences, found {len(sentences)}"
        )
    return [
        FeedbackSentence(bucket, index, sentences[(bucket, index)])
        for bucket in range(BUCKET_COUNT)
        for index in range(SENTENCES_PER_BUCKET)
    ]


def bucket_for(slider: float) -> int:
    """Bucket index of a slider value under the half-open rule (1.0 -> 4)."""
    return min(tenths(slider) // 2, BUCKET_COUNT - 1)


def pick_sentence(
    slider: float, rng_seed: int, catalog: list[FeedbackSentence] | None = None
) -> FeedbackSentence:
    """Deterministically pick one of the bucket's three sentences.

    The choice hashes (seed, bucket), so the same seed re-shows the same
    sentence while the handle stays inside one bucket, and varying seeds
    spread uniformly over the three options.
    """
    if catalog is None:
        catalog = _default_catalog()
    bucket = bucket_for(slider)
    digest = hashlib.sha256(f"{rng_seed}:{bucket}".encode("ascii")).digest()
    index = int.from_bytes(digest[:8], "big") % SENTENCES_PER_BUCKET
    return catalog[bucket * SENTENCES_PER_BUCKET + index]


_CATALOG_CACHE: list[FeedbackSentence] | None = None


def _default_catalog() -> list[FeedbackSentence]:
    global _CATALOG_CACHE
    if _CATALOG_CACHE is None:
        _CATALOG_CACHE = load_catalog()
    return _CATALOG_CACHE
