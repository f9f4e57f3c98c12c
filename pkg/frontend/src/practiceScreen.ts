// Practising phase: answer the three committed exercises one by one,
// seeing the graded result and fresh mastery after each.

import { ApiError, PracticeApi } from "./api";
import { bandChip } from "./bands";
import type { AnswerOut, PlanOut } from "./types";

export interface PracticeScreenOptions {
  api: PracticeApi;
  sessionId: string;
  plan: PlanOut;
  onCompleted: (last: AnswerOut) => void;
}

export function renderPracticeScreen(
  container: HTMLElement,
  options: PracticeScreenOptions,
): HTMLElement {
  const screen = document.createElement("section");
  screen.className = "practice-screen";

  const status = document.createElement("p");
  status.className = "practice-status";
  status.textContent = "Answer all three exercises.";
  screen.appendChild(status);

  for (const exercise of options.plan.exercises) {
    const card = document.createElement("form");
    card.className = "exercise-card";
    card.dataset.exerciseId = exercise.id;

    const prompt = document.createElement("p");
    prompt.className = "exercise-prompt";
    prompt.textContent = exercise.prompt;

    const answer = document.createElement("input");
    answer.type = "text";
    answer.name = "answer";
    answer.setAttribute("aria-label", `answer for ${exercise.id}`);

    const submit = document.createElement("button");
    submit.type = "submit";
    submit.textContent = "Check";

    const verdict = document.createElement("span");
    verdict.className = "verdict";

    card.append(prompt, answer, submit, verdict);
    card.addEventListener("submit", async (event) => {
      event.preventDefault();
      submit.disabled = true;
      try {
        const result = await options.api.submitAnswer(
          options.sessionId,
          exercise.id,
          answer.value,
        );
        answer.disabled = true;
        verdict.textContent = result.correct ? "✓ correct" : "✗ not quite";
        verdict.className = `verdict ${result.correct ? "verdict-correct" : "verdict-wrong"}`;
        status.replaceChildren(
          `Mastery now ${(result.score * 100).toFixed(1)}% `,
          bandChip(result.band),
        );
        if (result.phase === "completed") {
          options.onCompleted(result);
        }
      } catch (error) {
        submit.disabled = false;
        verdict.textContent =
          error instanceof ApiError ? error.message : "submission failed";
        verdict.className = "verdict verdict-error";
      }
    });
    screen.appendChild(card);
  }

  container.replaceChildren(screen);
  return screen;
}
