// Teacher why view: the topic's exercises laid out along a branch in
// rising difficulty, recommended ones highlighted, the learner's mastery
// label pinned beside it. Hovering an exercise reveals its attempt tally.

import { bandChip } from "./bands";
import type { WhyOut } from "./types";

export function renderTeacherView(container: HTMLElement, payload: WhyOut): HTMLElement {
  const view = document.createElement("section");
  view.className = "teacher-view";

  const header = document.createElement("p");
  header.className = "teacher-header";
  header.append(
    `Topic ${payload.topic_id} — learner mastery ${(payload.learner_score * 100).toFixed(1)}% `,
    bandChip(payload.learner_band),
  );
  view.appendChild(header);

  if (payload.items.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "No exercises in this topic yet.";
    view.appendChild(empty);
    container.replaceChildren(view);
    return view;
  }

  const branch = document.createElement("div");
  branch.className = "difficulty-branch";

  const difficulties = payload.items.map((item) => item.difficulty);
  const lo = Math.min(...difficulties);
  const hi = Math.max(...difficulties);
  const span = hi - lo || 1;

  const details = document.createElement("p");
  details.className = "item-details";
  details.textContent = "Hover an exercise for its attempt history.";

  // payload order is ascending difficulty; keep it, position along the branch
  for (const item of payload.items) {
    const dot = document.createElement("button");
    dot.type = "button";
    dot.className = item.recommended ? "exercise-dot recommended" : "exercise-dot";
    dot.dataset.exerciseId = item.exercise_id;
    dot.dataset.difficulty = String(item.difficulty);
    dot.style.left = `${((item.difficulty - lo) / span) * 100}%`;
    dot.title = item.exercise_id;
    dot.addEventListener("mouseenter", () => {
      const last =
        item.last_correct === null
          ? "never attempted"
          : item.last_correct
            ? "last attempt correct"
            : "last attempt incorrect";
      details.textContent =
        `${item.exercise_id}: difficulty ${item.difficulty.toFixed(2)}, ` +
        `${item.attempt_count} attempt(s), ${last}` +
        (item.recommended ? " — in the current series" : "");
    });
    branch.appendChild(dot);
  }

  view.append(branch, details);
  container.replaceChildren(view);
  return view;
}
