// Motivational sentence panel: exactly one sentence for the slider's
// current bucket, swapped whenever the service picks a new one.

import type { SentenceOut } from "./types";

export function renderFeedbackSentence(container: HTMLElement, sentence: SentenceOut): void {
  container.replaceChildren();
  container.classList.add("feedback-panel");

  const quote = document.createElement("blockquote");
  quote.className = "feedback-sentence";
  quote.dataset.bucket = String(sentence.bucket_index);
  quote.textContent = sentence.text;
  container.appendChild(quote);
}
