// Canned service payloads and a recording fetch mock for the tests.

import { vi } from "vitest";
import type {
  AnswerOut,
  MetaOut,
  PlanOut,
  PreviewOut,
  ProjectionOut,
  SentenceOut,
  SessionOut,
  Variant,
  WhyOut,
} from "../src/types";

export const META: MetaOut = {
  slider_grid: Array.from({ length: 11 }, (_, i) => i / 10),
  band_thresholds: [0.2, 0.4, 0.6, 0.8],
  bands: [
    { ordinal: 0, label: "Novice" },
    { ordinal: 1, label: "AdvancedBeginner" },
    { ordinal: 2, label: "Competent" },
    { ordinal: 3, label: "Proficient" },
    { ordinal: 4, label: "Expert" },
  ],
  variants: ["what_if", "feedback", "slider_only", "none"],
};

export function makePlan(slider: number): PlanOut {
  return {
    series_id: `sess-1-s${Math.round(slider * 10)}`,
    slider,
    target_difficulty: slider - 0.85,
    exercise_ids: ["ex-a", "ex-b", "ex-c"],
    exercises: [
      { id: "ex-a", prompt: "first question", difficulty: -0.5 },
      { id: "ex-b", prompt: "second question", difficulty: 0.0 },
      { id: "ex-c", prompt: "third question", difficulty: 0.5 },
    ],
  };
}

export function makeProjection(
  slider: number,
  overrides: Partial<ProjectionOut> = {},
): ProjectionOut {
  return {
    current_rating: 0,
    projected_rating: 0.54,
    current_score: 0.5,
    projected_score: 0.63,
    current_band: "Competent",
    projected_band: "Proficient",
    slider,
    series_exercise_ids: ["ex-a", "ex-b", "ex-c"],
    ...overrides,
  };
}

export const SENTENCES_BY_BUCKET: SentenceOut[] = [
  { bucket_index: 0, sentence_index: 0, text: "bucket zero sentence" },
  { bucket_index: 1, sentence_index: 1, text: "bucket one sentence" },
  { bucket_index: 2, sentence_index: 2, text: "bucket two sentence" },
  { bucket_index: 3, sentence_index: 0, text: "bucket three sentence" },
  { bucket_index: 4, sentence_index: 1, text: "bucket four sentence" },
];

export function bucketFor(slider: number): number {
  return Math.min(Math.floor(Math.round(slider * 10) / 2), 4);
}

export function makePreview(variant: Variant, slider: number): PreviewOut {
  return {
    session_id: "sess-1",
    variant,
    slider,
    plan: makePlan(slider),
    projection: variant === "what_if" ? makeProjection(slider) : null,
    sentence: variant === "feedback" ? SENTENCES_BY_BUCKET[bucketFor(slider)] : null,
  };
}

export function makeSession(variant: Variant, phase = "choosing_difficulty"): SessionOut {
  return {
    session_id: "sess-1",
    learner_id: "lea",
    topic_id: "algebra",
    variant,
    phase: phase as SessionOut["phase"],
    plan: phase === "practising" ? makePlan(0.5) : null,
    answered: {},
  };
}

export function makeAnswer(overrides: Partial<AnswerOut> = {}): AnswerOut {
  return {
    session_id: "sess-1",
    exercise_id: "ex-a",
    correct: true,
    rating: 0.2,
    score: 0.5498,
    band: "Competent",
    phase: "practising",
    answered_count: 1,
    ...overrides,
  };
}

export function makeWhy(): WhyOut {
  return {
    topic_id: "algebra",
    learner_band: "Competent",
    learner_score: 0.5,
    items: [
      { exercise_id: "e1", difficulty: -2.0, recommended: false, attempt_count: 0, last_correct: null },
      { exercise_id: "e2", difficulty: -1.0, recommended: true, attempt_count: 2, last_correct: true },
      { exercise_id: "e3", difficulty: 0.0, recommended: true, attempt_count: 1, last_correct: false },
      { exercise_id: "e4", difficulty: 1.0, recommended: true, attempt_count: 0, last_correct: null },
      { exercise_id: "e5", difficulty: 2.0, recommended: false, attempt_count: 4, last_correct: true },
    ],
  };
}

export interface RecordedCall {
  method: string;
  url: string;
  body: unknown;
}

export type RouteHandler = (call: RecordedCall) => unknown;

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

/**
 * Installs a fetch mock that answers from `routes` (keyed
 * "METHOD path-suffix") and records every call for network audits.
 */
export function installFetchMock(routes: Record<string, RouteHandler>): RecordedCall[] {
  const calls: RecordedCall[] = [];
  const mock = vi.fn(async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    const call: RecordedCall = { method, url, body };
    calls.push(call);
    for (const [key, handler] of Object.entries(routes)) {
      const [routeMethod, suffix] = key.split(" ", 2);
      if (method === routeMethod && new URL(url).pathname.endsWith(suffix)) {
        const result = handler(call);
        return result instanceof Response ? result : jsonResponse(result);
      }
    }
    return jsonResponse({ code: "not_found", message: `no route for ${method} ${url}`, detail: {} }, 404);
  });
  vi.stubGlobal("fetch", mock);
  return calls;
}

export function flushAsync(): Promise<void> {
  return new Promise((resolve) => {
    setTimeout(resolve, 0);
  });
}
