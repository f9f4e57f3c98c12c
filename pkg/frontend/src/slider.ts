// The 11-point difficulty slider. The underlying input ranges over the
// integer tenths 0..10, so pointer release can only ever land on a grid
// point; values are exposed as the canonical floats 0.0 .. 1.0.

export const SLIDER_GRID: number[] = Array.from({ length: 11 }, (_, i) => i / 10);

export function snapToGrid(value: number): number {
  if (!Number.isFinite(value)) return 0.5;
  const tenths = Math.min(10, Math.max(0, Math.round(value * 10)));
  return SLIDER_GRID[tenths];
}

export interface SliderControl {
  element: HTMLDivElement;
  input: HTMLInputElement;
  value(): number;
  set(value: number): void;
  onInput(listener: (value: number) => void): void;
}

export function createSliderControl(initial = 0.5): SliderControl {
  const wrapper = document.createElement("div");
  wrapper.className = "difficulty-slider";

  const input = document.createElement("input");
  input.type = "range";
  input.min = "0";
  input.max = "10";
  input.step = "1";
  input.value = String(Math.round(snapToGrid(initial) * 10));
  input.setAttribute("aria-label", "series difficulty");

  const low = document.createElement("span");
  low.className = "slider-end";
  low.textContent = "easier";
  const high = document.createElement("span");
  high.className = "slider-end";
  high.textContent = "harder";

  const readout = document.createElement("output");
  readout.className = "slider-readout";

  const listeners: Array<(value: number) => void> = [];
  const current = () => SLIDER_GRID[Number(input.value)];
  const refresh = () => {
    readout.textContent = current().toFixed(1);
  };
  refresh();

  input.addEventListener("input", () => {
    refresh();
    for (const listener of listeners) listener(current());
  });

  wrapper.append(low, input, high, readout);
  return {
    element: wrapper,
    input,
    value: current,
    set(value: number) {
      input.value = String(Math.round(snapToGrid(value) * 10));
      refresh();
    },
    onInput(listener) {
      listeners.push(listener);
    },
  };
}
