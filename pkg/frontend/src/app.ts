// Application shell: choose learner/topic/variant, run the practice
// cycle (steer -> practise -> done -> restart), or open the teacher view.

import { ApiError, PracticeApi } from "./api";
import { bandChip } from "./bands";
import { renderControlScreen } from "./controlScreen";
import { renderPracticeScreen } from "./practiceScreen";
import { renderTeacherView } from "./teacherView";
import type { AnswerOut, MetaOut, Variant } from "./types";

export function mountApp(root: HTMLElement, api: PracticeApi): void {
  const title = document.createElement("h1");
  title.textContent = "Practice";
  const setup = document.createElement("form");
  setup.className = "setup-form";
  const stage = document.createElement("div");
  stage.className = "stage";
  root.replaceChildren(title, setup, stage);

  const learnerInput = document.createElement("input");
  learnerInput.placeholder = "learner id";
  learnerInput.value = "demo-learner";
  learnerInput.setAttribute("aria-label", "learner id");

  const topicSelect = document.createElement("select");
  topicSelect.setAttribute("aria-label", "topic");

  const variantSelect = document.createElement("select");
  variantSelect.setAttribute("aria-label", "explanation variant");
  for (const variant of ["what_if", "feedback", "slider_only", "none"]) {
    const option = document.createElement("option");
    option.value = variant;
    option.textContent = variant;
    variantSelect.appendChild(option);
  }

  const startButton = document.createElement("button");
  startButton.type = "submit";
  startButton.textContent = "Choose difficulty";

  const teacherButton = document.createElement("button");
  teacherButton.type = "button";
  teacherButton.textContent = "Teacher view";

  const message = document.createElement("p");
  message.className = "error-line";
  message.hidden = true;

  setup.append(learnerInput, topicSelect, variantSelect, startButton, teacherButton, message);

  const fail = (error: unknown) => {
    message.hidden = false;
    message.textContent =
      error instanceof ApiError ? `${error.message} (${error.code})` : String(error);
  };

  let meta: MetaOut | null = null;
  void (async () => {
    try {
      meta = await api.meta();
      const topics = await api.topics();
      for (const topic of topics.filter((t) => t.practice_ready)) {
        const option = document.createElement("option");
        option.value = topic.topic_id;
        option.textContent = `${topic.topic_id} (${topic.exercise_count})`;
        topicSelect.appendChild(option);
      }
    } catch (error) {
      fail(error);
    }
  })();

  const showCompletion = (last: AnswerOut) => {
    const done = document.createElement("section");
    done.className = "completion-screen";
    const line = document.createElement("p");
    line.append(
      `Series complete. Mastery ${(last.score * 100).toFixed(1)}% `,
      bandChip(last.band),
    );
    const again = document.createElement("button");
    again.textContent = "Practise again";
    again.addEventListener("click", () => void startCycle());
    done.append(line, again);
    stage.replaceChildren(done);
  };

  const startCycle = async () => {
    if (!meta) return;
    message.hidden = true;
    try {
      const session = await api.startSession(
        learnerInput.value.trim(),
        topicSelect.value,
        variantSelect.value as Variant,
      );
      renderControlScreen(stage, {
        api,
        session,
        meta,
        onCommitted(committed, lastPreview) {
          renderPracticeScreen(stage, {
            api,
            sessionId: committed.session_id,
            plan: committed.plan ?? lastPreview.plan,
            onCompleted: showCompletion,
          });
        },
      });
    } catch (error) {
      fail(error);
    }
  };

  setup.addEventListener("submit", (event) => {
    event.preventDefault();
    void startCycle();
  });

  teacherButton.addEventListener("click", async () => {
    message.hidden = true;
    try {
      const payload = await api.teacherWhy(learnerInput.value.trim(), topicSelect.value);
      renderTeacherView(stage, payload);
    } catch (error) {
      fail(error);
    }
  });
}
