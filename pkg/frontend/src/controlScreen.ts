// The pre-practice control screen: steer the series difficulty on the
// 11-step slider and watch the linked explanation react live. This screen
// only ever previews and commits; it has no way to touch mastery state.

import { ApiError, LatestOnly, PracticeApi } from "./api";
import { debounce } from "./debounce";
import { renderFeedbackSentence } from "./feedbackPanel";
import { createSliderControl } from "./slider";
import type { MetaOut, PreviewOut, SessionOut } from "./types";
import { renderWhatIfAxis } from "./whatif";

// must stay at or under 150 so slider reactions read as real-time
export const PREVIEW_DEBOUNCE_MS = 120;

export interface ControlScreenOptions {
  api: PracticeApi;
  session: SessionOut;
  meta: MetaOut;
  onCommitted: (session: SessionOut, lastPreview: PreviewOut) => void;
  debounceMs?: number;
}

export interface ControlScreenHandle {
  element: HTMLElement;
  destroy(): void;
}

export function renderControlScreen(
  container: HTMLElement,
  options: ControlScreenOptions,
): ControlScreenHandle {
  const { api, session, meta } = options;
  const delayMs = options.debounceMs ?? PREVIEW_DEBOUNCE_MS;
  const screen = document.createElement("section");
  screen.className = "control-screen";
  screen.dataset.variant = session.variant;

  const intro = document.createElement("p");
  intro.className = "control-intro";
  intro.textContent =
    session.variant === "none"
      ? "Your next series of three exercises is ready."
      : "Set how hard your next three exercises should be.";
  screen.appendChild(intro);

  const errorLine = document.createElement("p");
  errorLine.className = "error-line";
  errorLine.setAttribute("role", "alert");
  errorLine.hidden = true;

  const seriesList = document.createElement("ol");
  seriesList.className = "series-preview";

  const startButton = document.createElement("button");
  startButton.className = "start-button";
  startButton.textContent = "Start practising";
  startButton.disabled = true;

  const showError = (message: string) => {
    errorLine.textContent = message;
    errorLine.hidden = false;
  };
  const clearError = () => {
    errorLine.hidden = true;
    errorLine.textContent = "";
  };

  let lastPreview: PreviewOut | null = null;
  const inFlight = new LatestOnly();

  const hasPanel = session.variant === "what_if" || session.variant === "feedback";
  let panel: HTMLElement | null = null;
  if (hasPanel) {
    panel = document.createElement("div");
    panel.className = "explanation-panel";
  }

  const applyPreview = (preview: PreviewOut) => {
    lastPreview = preview;
    startButton.disabled = false;
    seriesList.replaceChildren(
      ...preview.plan.exercises.map((exercise) => {
        const item = document.createElement("li");
        item.textContent = exercise.prompt;
        return item;
      }),
    );
    if (panel && preview.projection) {
      renderWhatIfAxis(panel, preview.projection, meta);
    } else if (panel && preview.sentence) {
      renderFeedbackSentence(panel, preview.sentence);
    }
  };

  const requestPreview = async (slider: number | null) => {
    clearError();
    try {
      const preview = await inFlight.run((signal) =>
        api.preview(session.session_id, slider, signal),
      );
      if (preview) applyPreview(preview);
    } catch (error) {
      if (error instanceof ApiError) {
        showError(error.message);
      } else {
        showError("The practice service is not reachable.");
      }
    }
  };

  const debounced = debounce((slider: number) => void requestPreview(slider), delayMs);

  if (session.variant === "none") {
    void requestPreview(null);
  } else {
    const slider = createSliderControl(0.5);
    slider.onInput((value) => debounced.call(value));
    screen.appendChild(slider.element);
    if (panel) {
      // visual link between the control and the explanation it drives
      const connector = document.createElement("div");
      connector.className = "panel-connector";
      screen.appendChild(connector);
    }
    void requestPreview(slider.value());
  }
  if (panel) screen.appendChild(panel);
  screen.append(errorLine, seriesList, startButton);

  startButton.addEventListener("click", async () => {
    if (!lastPreview) return;
    clearError();
    startButton.disabled = true;
    try {
      const committed = await api.commit(session.session_id);
      options.onCommitted(committed, lastPreview);
    } catch (error) {
      startButton.disabled = false;
      showError(error instanceof ApiError ? error.message : "Could not start the series.");
    }
  });

  container.replaceChildren(screen);
  return {
    element: screen,
    destroy() {
      debounced.cancel();
      inFlight.cancel();
      container.replaceChildren();
    },
  };
}
