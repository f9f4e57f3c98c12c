"""Series composition: slider grid, target mapping, nearest-3 selection."""

import math
import random
from itertools import combinations

import pytest

from practicekit.config import EngineConfig
from practicekit.errors import (
    ConfigError,
    InsufficientBankError,
    NotFoundError,
    SliderOffGridError,
)
from practicekit.models import Attempt, LearnerTopicState
from practicekit.recommender import compose_series, target_difficulty
from practicekit.slider import GRID, snap, tenths

from conftest import make_bank


def state_for(rating: float, learner="lea", topic="algebra") -> LearnerTopicState:
    return LearnerTopicState(learner_id=learner, topic_id=topic, rating=rating)


def attempt_on(exercise_id: str, seq: int, learner="lea", topic="algebra", correct=True) -> Attempt:
    return Attempt(
        seq=seq,
        learner_id=learner,
        topic_id=topic,
        exercise_id=exercise_id,
        correct=correct,
        learner_rating_before=0.0,
        learner_rating_after=0.0,
        exercise_difficulty_before=0.0,
        exercise_difficulty_after=0.0,
    )


class TestSliderGrid:
    def test_accepts_all_eleven_grid_points(self):
        assert [snap(v) for v in GRID] == list(GRID)
        assert len(GRID) == 11

    def test_snaps_float_noise_from_json(self):
        assert snap(0.30000000000000004) == 0.3
        assert snap(0.7000000000000001) == 0.7

    @pytest.mark.parametrize("bad", [0.35, -0.1, 1.1, 0.05, 0.999, math.nan, math.inf, None, "x"])
    def test_rejects_off_grid(self, bad):
        with pytest.raises(SliderOffGridError) as excinfo:
            snap(bad)
        assert excinfo.value.detail["legal_values"] == list(GRID)

    def test_tenths(self):
        assert [tenths(v) for v in GRID] == list(range(11))


class TestTargetDifficulty:
    def test_midpoint_slider_cancels_beta_term(self):
        for theta in (-1.2, 0.0, 2.4):
            assert target_difficulty(theta, 0.5, 2.0, 0.85) == pytest.approx(theta - 0.85)

    def test_endpoints(self):
        # learner - delta + beta * (slider - 0.5), by hand
        assert target_difficulty(0.0, 1.0, 2.0, 0.85) == pytest.approx(0.15)
        assert target_difficulty(0.0, 0.0, 2.0, 0.85) == pytest.approx(-1.85)

    def test_strictly_increasing_across_grid(self):
        targets = [target_difficulty(0.7, v, 2.0, 0.85) for v in GRID]
        assert all(a < b for a, b in zip(targets, targets[1:]))

    def test_rejects_nonpositive_beta(self):
        with pytest.raises(ConfigError):
            target_difficulty(0.0, 0.5, 0.0, 0.85)


def brute_force_triple(difficulties: dict[str, float], target: float) -> set[str]:
    """Independent oracle: exhaustively minimise the summed distance
    (unique when all distances are distinct)."""
    best = min(
        combinations(difficulties, 3),
        key=lambda ids: sum(abs(difficulties[i] - target) for i in ids),
    )
    return set(best)


class TestComposeSeries:
    def test_bank_of_three_returns_all_in_ascending_order(self):
        bank = make_bank([1.0, -1.0, 0.0])
        plan = compose_series(state_for(0.85), 0.5, bank.values(), [])
        assert plan.target_difficulty == pytest.approx(0.0)
        difficulties = [bank[i].difficulty for i in plan.exercise_ids]
        assert difficulties == [-1.0, 0.0, 1.0]

    def test_five_item_bank_picks_inner_three(self, bank5):
        # target 0.0: brute force over all 10 triples agrees
        plan = compose_series(state_for(0.85), 0.5, bank5.values(), [])
        difficulties = {i: e.difficulty for i, e in bank5.items()}
        assert set(plan.exercise_ids) == brute_force_triple(difficulties, 0.0)
        assert [difficulties[i] for i in plan.exercise_ids] == [-1.0, 0.0, 1.0]

    def test_matches_bruteforce_on_random_banks(self):
        rng = random.Random(20240811)
        for trial in range(200):
            size = rng.randint(3, 12)
            # distinct difficulties so the optimum is unique
            values = rng.sample(range(-400, 400), size)
            bank = make_bank([v / 37.0 for v in values])
            slider = rng.choice(GRID)
            rating = rng.uniform(-3, 3)
            plan = compose_series(state_for(rating), slider, bank.values(), [])
            difficulties = {i: e.difficulty for i, e in bank.items()}
            expected = brute_force_triple(difficulties, plan.target_difficulty)
            assert set(plan.exercise_ids) == expected, f"trial {trial}"

    def test_equal_distance_equal_attempts_breaks_tie_by_id(self):
        # two exercises both 0.5 away from the target
        bank = make_bank([-0.5, 0.5, 0.5, 3.0])
        config = EngineConfig(delta=0.0)  # target = rating = 0.0
        plan = compose_series(state_for(0.0), 0.5, bank.values(), [], config)
        assert set(plan.exercise_ids) == {"ex-000", "ex-001", "ex-002"}

    def test_fewer_prior_attempts_wins_tie(self):
        bank = make_bank([-0.5, 0.5, 0.5, 0.5])
        config = EngineConfig(delta=0.0, recency_window=0)
        # ex-001 attempted twice long ago; equally distant ex-002/ex-003 untouched
        history = [attempt_on("ex-001", seq) for seq in (1, 2)]
        plan = compose_series(state_for(0.0), 0.5, bank.values(), history, config)
        assert set(plan.exercise_ids) == {"ex-000", "ex-002", "ex-003"}

    def test_recently_attempted_exercises_are_avoided(self):
        bank = make_bank([-1.0, -0.5, 0.0, 0.5, 1.0])
        config = EngineConfig(delta=0.0)
        history = [attempt_on("ex-002", 1)]  # the exercise closest to target 0.0
        plan = compose_series(state_for(0.0), 0.5, bank.values(), history, config)
        assert "ex-002" not in plan.exercise_ids
        # next-nearest pair, then the distance-1.0 tie breaks to the smaller id
        assert set(plan.exercise_ids) == {"ex-000", "ex-001", "ex-003"}

    def test_recency_filter_relaxes_for_small_banks(self):
        bank = make_bank([-1.0, 0.0, 1.0])
        history = [attempt_on(f"ex-{i:03d}", seq + 1) for seq, i in enumerate([0, 1, 2])]
        plan = compose_series(state_for(0.0), 0.5, bank.values(), history)
        assert len(set(plan.exercise_ids)) == 3

    def test_pure_function(self, bank5):
        history = [attempt_on("ex-002", 1)]
        first = compose_series(state_for(0.3), 0.7, bank5.values(), history)
        second = compose_series(state_for(0.3), 0.7, bank5.values(), history)
        assert first == second

    def test_does_not_mutate_inputs(self, bank5):
        before = {i: e.difficulty for i, e in bank5.items()}
        state = state_for(0.3)
        compose_series(state, 0.7, bank5.values(), [])
        assert {i: e.difficulty for i, e in bank5.items()} == before
        assert state.rating == 0.3

    def test_unknown_topic(self, bank5):
        with pytest.raises(NotFoundError):
            compose_series(state_for(0.0, topic="geometry"), 0.5, bank5.values(), [])

    def test_insufficient_bank(self):
        bank = make_bank([0.0, 1.0])
        with pytest.raises(InsufficientBankError):
            compose_series(state_for(0.0), 0.5, bank.values(), [])

    def test_off_grid_slider_rejected(self, bank5):
        with pytest.raises(SliderOffGridError):
            compose_series(state_for(0.0), 0.42, bank5.values(), [])

    def test_mean_selected_difficulty_nondecreasing_in_slider(self):
        # arithmetic grid of 40 items, no history
        bank = make_bank([i * 0.15 - 3.0 for i in range(40)])
        difficulties = {i: e.difficulty for i, e in bank.items()}
        means = []
        for v in GRID:
            plan = compose_series(state_for(0.2), v, bank.values(), [])
            means.append(sum(difficulties[i] for i in plan.exercise_ids) / 3.0)
        assert all(a <= b + 1e-12 for a, b in zip(means, means[1:]))
