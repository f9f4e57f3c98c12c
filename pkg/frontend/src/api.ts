// Typed fetch client for the practice service. All service failures are
// surfaced as ApiError carrying the machine-readable code from the body.

import type {
  AnswerOut,
  ErrorBody,
  MasteryOut,
  MetaOut,
  PreviewOut,
  SessionOut,
  TopicOut,
  Variant,
  WhyOut,
} from "./types";

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;
  readonly detail: Record<string, unknown>;

  constructor(status: number, body: ErrorBody) {
    super(body.message);
    this.name = "ApiError";
    this.status = status;
    this.code = body.code;
    this.detail = body.detail ?? {};
  }
}

export function isAbortError(error: unknown): boolean {
  return error instanceof DOMException && error.name === "AbortError";
}

async function parseError(response: Response): Promise<ApiError> {
  let body: ErrorBody = { code: "error", message: response.statusText, detail: {} };
  try {
    const parsed = (await response.json()) as Partial<ErrorBody>;
    body = {
      code: parsed.code ?? "error",
      message: parsed.message ?? response.statusText,
      detail: parsed.detail ?? {},
    };
  } catch {
    // non-JSON error body; keep the status text
  }
  return new ApiError(response.status, body);
}

export class PracticeApi {
  constructor(readonly baseUrl: string) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    signal?: AbortSignal,
  ): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method,
      signal,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      throw await parseError(response);
    }
    return (await response.json()) as T;
  }

  topics(): Promise<TopicOut[]> {
    return this.request("GET", "/topics");
  }

  meta(): Promise<MetaOut> {
    return this.request("GET", "/meta");
  }

  startSession(learnerId: string, topicId: string, variant: Variant): Promise<SessionOut> {
    return this.request("POST", "/sessions", {
      learner_id: learnerId,
      topic_id: topicId,
      variant,
    });
  }

  getSession(sessionId: string): Promise<SessionOut> {
    return this.request("GET", `/sessions/${sessionId}`);
  }

  preview(sessionId: string, slider: number | null, signal?: AbortSignal): Promise<PreviewOut> {
    const body = slider === null ? {} : { slider };
    return this.request("POST", `/sessions/${sessionId}/preview`, body, signal);
  }

  commit(sessionId: string): Promise<SessionOut> {
    return this.request("POST", `/sessions/${sessionId}/commit`);
  }

  submitAnswer(sessionId: string, exerciseId: string, answer: string): Promise<AnswerOut> {
    return this.request("POST", `/sessions/${sessionId}/answers`, {
      exercise_id: exerciseId,
      answer,
    });
  }

  mastery(learnerId: string, topicId: string): Promise<MasteryOut> {
    return this.request("GET", `/learners/${learnerId}/topics/${topicId}/mastery`);
  }

  teacherWhy(learnerId: string, topicId: string): Promise<WhyOut> {
    const params = new URLSearchParams({ learner: learnerId, topic: topicId });
    return this.request("GET", `/teacher/why?${params}`);
  }
}

/**
 * Runs async tasks so that starting a new one aborts the previous: the
 * preview in flight is always for the latest slider position. Superseded
 * calls resolve to undefined instead of rejecting.
 */
export class LatestOnly {
  private controller: AbortController | null = null;

  async run<T>(task: (signal: AbortSignal) => Promise<T>): Promise<T | undefined> {
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    try {
      const result = await task(controller.signal);
      return controller.signal.aborted ? undefined : result;
    } catch (error) {
      if (isAbortError(error) || controller.signal.aborted) {
        return undefined;
      }
      throw error;
    }
  }

  cancel(): void {
    this.controller?.abort();
    this.controller = null;
  }
}
