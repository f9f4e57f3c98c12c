"""Seeded simulated-learner population for calibration and soak testing.

Each simulated learner has a hidden true skill and answers with
probability predict_correct(true_skill, item difficulty) — the same
response model the estimator assumes. Learners run against private store
replicas, so populations can be simulated in any order (or in parallel)
and merged; everything is deterministic given the seed.
"""

from __future__ import annotations

import csv
import io
import random
import statistics
from dataclasses import dataclass, field, replace
from pathlib import Path

from .config import EngineConfig
from .errors import ConfigError
from .feedback import bucket_for, load_catalog
from .mastery import logistic, mastery_score, to_band
from .models import Exercise, Variant
from .service import PracticeService
from .slider import GRID, snap
from .store import Store

SIM_TOPIC = "sim-topic"

POLICY_FIXED = "fixed"
POLICY_GREEDY_HARDER = "greedy_harder"
POLICY_FEEDBACK_FOLLOWER = "feedback_follower"


@dataclass(frozen=True)
class SimPolicy:
    """How a simulated learner sets the slider before each series."""

    kind: str = POLICY_FIXED
    slider: float = 0.5

    def __post_init__(self) -> None:
        if self.kind not in (POLICY_FIXED, POLICY_GREEDY_HARDER, POLICY_FEEDBACK_FOLLOWER):
            raise ConfigError(f"unknown policy kind: {self.kind!r}")
        object.__setattr__(self, "slider", snap(self.slider))

    @classmethod
    def parse(cls, spec: str) -> "SimPolicy":
        """Parse 'fixed:0.5', 'greedy_harder' or 'feedback_follower'."""
        if spec.startswith(f"{POLICY_FIXED}:"):
            return cls(POLICY_FIXED, float(spec.split(":", 1)[1]))
        if spec == POLICY_FIXED:
            return cls(POLICY_FIXED, 0.5)
        return cls(spec)

    def next_slider(self, previous: float) -> float:
        if self.kind == POLICY_FIXED:
            return self.slider
        if self.kind == POLICY_GREEDY_HARDER:
            return 1.0
        # feedback_follower: the low buckets carry try-harder nudges, the top
        # bucket cautions; follow the nudge one grid step at a time.
        bucket = bucket_for(previous)
        index = round(previous * 10)
        if bucket <= 2:
            index = min(index + 1, 10)
        elif bucket == 4:
            index = max(index - 1, 0)
        return GRID[index]


@dataclass(frozen=True)
class SimParams:
    population: int
    attempts_per_learner: int
    policy: SimPolicy = SimPolicy()
    seed: int = 0
    true_skill_mean: float = 0.0
    true_skill_sd: float = 1.0
    response_noise: float = 0.0
    bank_size: int = 161
    bank_low: float = -4.0
    bank_high: float = 4.0

    def __post_init__(self) -> None:
        if self.population <= 0:
            raise ConfigError(f"population must be positive, got {self.population}")
        if self.attempts_per_learner < 0:
            raise ConfigError(
                f"attempts_per_learner must be >= 0, got {self.attempts_per_learner}"
            )
        if not 0.0 <= self.response_noise <= 1.0:
            raise ConfigError(f"response_noise must be in [0, 1], got {self.response_noise}")
        if self.bank_size < 3:
            raise ConfigError(f"bank_size must be >= 3, got {self.bank_size}")
        if not self.bank_low < self.bank_high:
            raise ConfigError("bank_low must be below bank_high")


@dataclass(frozen=True)
class StepRow:
    learner: int
    step: int
    true_skill: float
    slider: float
    exercise_id: str
    difficulty: float
    p_true: float
    correct: bool
    rating_before: float
    rating_after: float
    abs_error: float


@dataclass(frozen=True)
class LearnerSummary:
    learner: int
    true_skill: float
    attempts: int
    final_rating: float
    abs_error: float
    final_score: float
    score_error: float
    final_band: str
    success_rate_last_50: float | None


@dataclass
class SimResult:
    params: SimParams
    config: EngineConfig
    steps: list[StepRow] = field(default_factory=list)
    summaries: list[LearnerSummary] = field(default_factory=list)
    stores: list[Store] = field(default_factory=list)  # only when keep_stores

    def median_abs_error(self) -> float:
        return statistics.median(s.abs_error for s in self.summaries)

    def calibration_share(self, low: float = 0.60, high: float = 0.80) -> float:
        """Share of learners whose last-50-attempt success rate lies in
        [low, high]; learners without attempts are excluded."""
        rates = [s.success_rate_last_50 for s in self.summaries if s.success_rate_last_50 is not None]
        if not rates:
            return 0.0
        return sum(1 for r in rates if low <= r <= high) / len(rates)

    def steps_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            [
                "learner", "step", "true_skill", "slider", "exercise_id", "difficulty",
                "p_true", "correct", "rating_before", "rating_after", "abs_error",
            ]
        )
        for row in self.steps:
            writer.writerow(
                [
                    row.learner, row.step, row.true_skill, row.slider, row.exercise_id,
                    row.difficulty, row.p_true, int(row.correct), row.rating_before,
                    row.rating_after, row.abs_error,
                ]
            )
        return out.getvalue()

    def summary_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            [
                "learner", "true_skill", "attempts", "final_rating", "abs_error",
                "final_score", "score_error", "final_band", "success_rate_last_50",
            ]
        )
        for s in self.summaries:
            writer.writerow(
                [
                    s.learner, s.true_skill, s.attempts, s.final_rating, s.abs_error,
                    s.final_score, s.score_error, s.final_band,
                    "" if s.success_rate_last_50 is None else s.success_rate_last_50,
                ]
            )
        return out.getvalue()

    def write_csvs(self, steps_path: str | Path, summary_path: str | Path) -> None:
        Path(steps_path).write_text(self.steps_csv(), encoding="utf-8")
        Path(summary_path).write_text(self.summary_csv(), encoding="utf-8")


def synthetic_bank(
    size: int, low: float, high: float, topic_id: str = SIM_TOPIC
) -> dict[str, Exercise]:
    """Arithmetic difficulty grid of ``size`` items across [low, high].
    Ids are zero-padded so lexicographic order matches difficulty order."""
    step = (high - low) / (size - 1)
    bank: dict[str, Exercise] = {}
    for i in range(size):
        exercise = Exercise(
            id=f"sim-{i:04d}",
            topic_id=topic_id,
            difficulty=low + i * step,
            prompt=f"practice item {i}",
            answer_key="ok",
        )
        bank[exercise.id] = exercise
    return bank


def _learner_rng(seed: int, learner: int) -> random.Random:
    return random.Random((seed * 1_000_003 + learner) & 0xFFFFFFFFFFFF)


def run_simulation(
    params: SimParams, config: EngineConfig | None = None, keep_stores: bool = False
) -> SimResult:
    """Run the whole population through the real service stack.

    Each learner gets a private bank replica; answers are Bernoulli draws
    from the true response model (optionally blurred towards a coin flip
    by ``response_noise``). ``keep_stores`` retains each learner's store
    for post-run integrity checks.
    """
    config = config or EngineConfig()
    base_bank = synthetic_bank(params.bank_size, params.bank_low, params.bank_high)
    catalog = load_catalog()
    result = SimResult(params=params, config=config)

    for learner in range(params.population):
        rng = _learner_rng(params.seed, learner)
        true_skill = rng.gauss(params.true_skill_mean, params.true_skill_sd)
        store = Store({eid: replace(e) for eid, e in base_bank.items()}, config)
        service = PracticeService(store, catalog=catalog)
        learner_id = f"sim-learner-{learner:04d}"

        slider = params.policy.slider if params.policy.kind == POLICY_FIXED else 0.5
        outcomes: list[bool] = []
        step = 0
        while step < params.attempts_per_learner:
            slider = params.policy.next_slider(slider)
            session = service.start_session(learner_id, SIM_TOPIC, Variant.SLIDER_ONLY)
            preview = service.preview(session.session_id, slider)
            service.commit_series(session.session_id)
            for exercise_id in preview.plan.exercise_ids:
                if step >= params.attempts_per_learner:
                    break
                exercise = store.exercise(exercise_id)
                difficulty = exercise.difficulty
                p_true = logistic(true_skill - difficulty)
                if params.response_noise:
                    p_true = 0.5 * params.response_noise + (1.0 - params.response_noise) * p_true
                correct = rng.random() < p_true
                before = store.state(learner_id, SIM_TOPIC).rating
                answer = exercise.answer_key if correct else "(no idea)"
                outcome = service.submit_answer(session.session_id, exercise_id, answer)
                step += 1
                outcomes.append(correct)
                result.steps.append(
                    StepRow(
                        learner=learner,
                        step=step,
                        true_skill=true_skill,
                        slider=slider,
                        exercise_id=exercise_id,
                        difficulty=difficulty,
                        p_true=p_true,
                        correct=correct,
                        rating_before=before,
                        rating_after=outcome.rating,
                        abs_error=abs(outcome.rating - true_skill),
                    )
                )

        if keep_stores:
            result.stores.append(store)
        final = store.state(learner_id, SIM_TOPIC)
        final_score = mastery_score(final.rating)
        last_50 = outcomes[-50:]
        result.summaries.append(
            LearnerSummary(
                learner=learner,
                true_skill=true_skill,
                attempts=len(outcomes),
                final_rating=final.rating,
                abs_error=abs(final.rating - true_skill),
                final_score=final_score,
                score_error=abs(final_score - mastery_score(true_skill)),
                final_band=to_band(final_score, config.band_thresholds).label,
                success_rate_last_50=(sum(last_50) / len(last_50)) if last_50 else None,
            )
        )
    return result
