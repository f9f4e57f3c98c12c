// The what-if panel: a vertical five-band axis ("climbing up") with a
// marker for the current mastery and one for where it would land if the
// whole series were solved correctly.

import { bandChip } from "./bands";
import type { MetaOut, ProjectionOut } from "./types";

function cellBounds(thresholds: number[]): Array<[number, number]> {
  const edges = [0, ...thresholds, 1];
  const bounds: Array<[number, number]> = [];
  for (let i = 0; i < edges.length - 1; i++) bounds.push([edges[i], edges[i + 1]]);
  return bounds;
}

export function renderWhatIfAxis(
  container: HTMLElement,
  projection: ProjectionOut,
  meta: MetaOut,
): void {
  container.replaceChildren();
  container.classList.add("whatif-panel");

  const axis = document.createElement("div");
  axis.className = "mastery-axis";

  // top-to-bottom: Expert down to Novice
  const bounds = cellBounds(meta.band_thresholds);
  for (let ordinal = meta.bands.length - 1; ordinal >= 0; ordinal--) {
    const cell = document.createElement("div");
    cell.className = "band-cell";
    cell.dataset.ordinal = String(ordinal);
    const [lower, upper] = bounds[ordinal];
    cell.style.height = `${(upper - lower) * 100}%`;
    cell.appendChild(bandChip(meta.bands[ordinal].label));
    axis.appendChild(cell);
  }

  const marker = (kind: "current" | "projected", score: number, label: string) => {
    const el = document.createElement("div");
    el.className = `mastery-marker marker-${kind}`;
    el.dataset.kind = kind;
    el.dataset.band = label;
    el.style.bottom = `${score * 100}%`;
    el.title = `${kind === "current" ? "now" : "if all correct"}: ${(score * 100).toFixed(1)}%`;
    el.textContent = kind === "current" ? "● you" : "○ after";
    return el;
  };
  axis.appendChild(marker("current", projection.current_score, projection.current_band));
  axis.appendChild(marker("projected", projection.projected_score, projection.projected_band));

  const summary = document.createElement("p");
  summary.className = "whatif-summary";
  const gain = projection.projected_score - projection.current_score;
  summary.append(
    "Solve all three correctly: ",
    bandChip(projection.current_band),
    " → ",
    bandChip(projection.projected_band),
    ` (+${(gain * 100).toFixed(1)} points)`,
  );

  container.append(axis, summary);
}
