"""Store behaviour: log fold, persistence, crash replay, audit."""

import dataclasses
import json
import random

import pytest

from practicekit.config import EngineConfig
from practicekit.errors import NotFoundError, StoreConsistencyError
from practicekit.mastery import update_rating
from practicekit.store import Store

from conftest import make_bank


def random_walk(store: Store, n: int, seed: int = 7, learner="lea", topic="algebra"):
    """Drive n seeded attempts through the store's write path."""
    rng = random.Random(seed)
    ids = sorted(store.exercises)
    for _ in range(n):
        store.record_attempt(learner, topic, rng.choice(ids), rng.random() < 0.6)


class TestRecordAttempt:
    def test_even_odds_update(self, bank5):
        store = Store(bank5)
        attempt = store.record_attempt("lea", "algebra", "ex-002", True)
        assert attempt.learner_rating_after == 0.2
        assert attempt.exercise_difficulty_after == -0.1
        assert store.state("lea", "algebra").rating == 0.2
        assert store.exercises["ex-002"].difficulty == -0.1

    def test_fold_matches_manual_replay(self, bank5):
        store = Store(bank5)
        random_walk(store, 60)
        rating = store.config.initial_rating
        difficulties = dict(store.initial_difficulties)
        for attempt in store.attempts:
            assert attempt.learner_rating_before == rating
            assert attempt.exercise_difficulty_before == difficulties[attempt.exercise_id]
            rating, new_difficulty = update_rating(
                rating,
                difficulties[attempt.exercise_id],
                attempt.correct,
                store.config.k_learner,
                store.config.k_item,
            )
            difficulties[attempt.exercise_id] = new_difficulty
            assert attempt.learner_rating_after == rating
        assert store.state("lea", "algebra").rating == rating
        assert store.state("lea", "algebra").attempt_count == 60

    def test_timestamps_monotone_per_learner_topic(self, bank5):
        store = Store(bank5)
        random_walk(store, 20)
        seqs = [a.seq for a in store.attempts_for("lea", "algebra")]
        assert seqs == sorted(seqs)

    def test_item_adaptation_can_be_disabled(self, bank5):
        store = Store(bank5, EngineConfig(adapt_item_difficulty=False))
        store.record_attempt("lea", "algebra", "ex-002", True)
        assert store.exercises["ex-002"].difficulty == 0.0
        assert store.state("lea", "algebra").rating == 0.2
        assert store.audit().ok

    def test_wrong_topic_rejected(self, bank5):
        store = Store(bank5)
        with pytest.raises(NotFoundError):
            store.record_attempt("lea", "geometry", "ex-002", True)

    def test_unknown_exercise_rejected(self, bank5):
        store = Store(bank5)
        with pytest.raises(NotFoundError):
            store.record_attempt("lea", "algebra", "ghost", True)


class TestAudit:
    def test_fresh_store_audits_clean(self, bank5):
        report = Store(bank5).audit()
        assert report.ok and report.attempts_replayed == 0

    def test_clean_after_many_attempts(self, bank5):
        store = Store(bank5)
        random_walk(store, 1000)
        report = store.audit()
        assert report.ok
        assert report.attempts_replayed == 1000

    def test_flags_corrupted_learner_state(self, bank5):
        store = Store(bank5)
        random_walk(store, 30)
        key = ("lea", "algebra")
        store.states[key] = dataclasses.replace(
            store.states[key], rating=store.states[key].rating + 0.25
        )
        report = store.audit()
        assert len([m for m in report.mismatches if m.kind == "learner_topic"]) == 1
        mismatch = report.mismatches[0]
        assert mismatch.key == "lea/algebra"
        assert mismatch.stored == pytest.approx(mismatch.recomputed + 0.25)

    def test_flags_corrupted_item_difficulty(self, bank5):
        store = Store(bank5)
        random_walk(store, 30)
        store.exercises["ex-001"].difficulty += 1.0
        report = store.audit()
        assert any(m.kind == "exercise" and m.key == "ex-001" for m in report.mismatches)


class TestPersistence:
    def test_reopen_reproduces_identical_state(self, tmp_path, bank5):
        log = tmp_path / "attempts.log"
        store = Store(bank5, log_path=log)
        random_walk(store, 40)
        snapshot = store.snapshot_bytes()
        store.close()

        reopened = Store.open(make_bank([-2.0, -1.0, 0.0, 1.0, 2.0]), log_path=log)
        assert reopened.snapshot_bytes() == snapshot
        assert reopened.audit().ok

    def test_truncated_tail_is_dropped(self, tmp_path, bank5):
        log = tmp_path / "attempts.log"
        store = Store(bank5, log_path=log)
        random_walk(store, 25)
        store.close()

        data = log.read_bytes()
        lines = data.splitlines(keepends=True)
        # cut into the middle of the final record, as a crash mid-write would
        torn = b"".join(lines[:-1]) + lines[-1][: len(lines[-1]) // 2]
        log.write_bytes(torn)

        reopened = Store.open(make_bank([-2.0, -1.0, 0.0, 1.0, 2.0]), log_path=log)
        assert len(reopened.attempts) == 24
        assert reopened.audit().ok
        # the surviving prefix folds to the same state the writer had then
        assert reopened.state("lea", "algebra").rating == store.attempts[23].learner_rating_after

    def test_mid_file_corruption_raises(self, tmp_path, bank5):
        log = tmp_path / "attempts.log"
        store = Store(bank5, log_path=log)
        random_walk(store, 5)
        store.close()
        lines = log.read_text().splitlines()
        lines[2] = lines[2][:10]
        log.write_text("\n".join(lines) + "\n")
        with pytest.raises(StoreConsistencyError):
            Store.open(make_bank([-2.0, -1.0, 0.0, 1.0, 2.0]), log_path=log)

    def test_discontinuous_log_raises(self, tmp_path, bank5):
        log = tmp_path / "attempts.log"
        store = Store(bank5, log_path=log)
        random_walk(store, 5)
        store.close()
        records = [json.loads(line) for line in log.read_text().splitlines()]
        records[3]["learner_rating_before"] += 0.5
        log.write_text("\n".join(json.dumps(r) for r in records) + "\n")
        with pytest.raises(StoreConsistencyError):
            Store.open(make_bank([-2.0, -1.0, 0.0, 1.0, 2.0]), log_path=log)

    def test_append_continues_after_reopen(self, tmp_path, bank5):
        log = tmp_path / "attempts.log"
        store = Store(bank5, log_path=log)
        random_walk(store, 10)
        store.close()
        reopened = Store.open(make_bank([-2.0, -1.0, 0.0, 1.0, 2.0]), log_path=log)
        reopened.record_attempt("lea", "algebra", "ex-000", True)
        assert reopened.attempts[-1].seq == 11
        reopened.close()
        final = Store.open(make_bank([-2.0, -1.0, 0.0, 1.0, 2.0]), log_path=log)
        assert len(final.attempts) == 11
        assert final.audit().ok


class TestSnapshot:
    def test_reads_leave_snapshot_untouched(self, bank5):
        store = Store(bank5)
        random_walk(store, 15)
        before = store.snapshot_bytes()
        store.state("lea", "algebra")
        store.attempts_for("lea", "algebra")
        store.topic_exercises("algebra")
        store.topic_counts()
        store.audit()
        assert store.snapshot_bytes() == before

    def test_write_changes_snapshot(self, bank5):
        store = Store(bank5)
        before = store.snapshot_bytes()
        store.record_attempt("lea", "algebra", "ex-002", True)
        assert store.snapshot_bytes() != before
