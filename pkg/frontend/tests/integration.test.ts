// Live contract check against a real service. Skipped unless
// PRACTICEKIT_URL points at a running backend, e.g.
//   practicekit serve --demo --port 8732 &
//   PRACTICEKIT_URL=http://127.0.0.1:8732 npx vitest run tests/integration.test.ts

import { describe, expect, it } from "vitest";
import { ApiError, PracticeApi } from "../src/api";

const url = process.env.PRACTICEKIT_URL;

describe.runIf(Boolean(url))("live service contract", () => {
  const api = new PracticeApi(url ?? "");

  it("walks the whole practice cycle", async () => {
    const topics = await api.topics();
    const topic = topics.find((t) => t.practice_ready);
    expect(topic).toBeDefined();

    const meta = await api.meta();
    expect(meta.slider_grid).toHaveLength(11);
    expect(meta.bands.map((b) => b.label)).toContain("Expert");

    const session = await api.startSession("it-learner", topic!.topic_id, "what_if");
    expect(session.phase).toBe("choosing_difficulty");

    const offGrid = await api.preview(session.session_id, 0.37).catch((e) => e);
    expect(offGrid).toBeInstanceOf(ApiError);
    expect((offGrid as ApiError).code).toBe("slider_off_grid");
    expect((offGrid as ApiError).detail.legal_values).toHaveLength(11);

    const preview = await api.preview(session.session_id, 0.7);
    expect(preview.plan.exercise_ids).toHaveLength(3);
    expect(preview.projection).not.toBeNull();
    expect(preview.projection!.projected_score).toBeGreaterThan(
      preview.projection!.current_score,
    );

    const committed = await api.commit(session.session_id);
    expect(committed.phase).toBe("practising");

    let last;
    for (const exerciseId of preview.plan.exercise_ids) {
      last = await api.submitAnswer(session.session_id, exerciseId, "deliberately wrong");
      expect(typeof last.correct).toBe("boolean");
    }
    expect(last!.phase).toBe("completed");

    const mastery = await api.mastery("it-learner", topic!.topic_id);
    expect(mastery.attempt_count).toBeGreaterThanOrEqual(3);

    const why = await api.teacherWhy("it-learner", topic!.topic_id);
    const difficulties = why.items.map((i) => i.difficulty);
    expect(difficulties).toEqual([...difficulties].sort((a, b) => a - b));
    expect(why.items.filter((i) => i.recommended)).toHaveLength(3);
  });

  it("serves a sentence per bucket for the feedback variant", async () => {
    const topics = await api.topics();
    const topic = topics.find((t) => t.practice_ready)!;
    const session = await api.startSession("it-learner-2", topic.topic_id, "feedback");
    const seen = new Set<number>();
    for (const slider of [0.0, 0.2, 0.4, 0.6, 0.8]) {
      const preview = await api.preview(session.session_id, slider);
      expect(preview.sentence).not.toBeNull();
      expect(preview.sentence!.text.length).toBeGreaterThan(10);
      seen.add(preview.sentence!.bucket_index);
    }
    expect([...seen].sort()).toEqual([0, 1, 2, 3, 4]);
  });
});
