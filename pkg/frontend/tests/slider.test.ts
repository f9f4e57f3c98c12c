// Slider control: grid snapping and grid-only emissions.

import { describe, expect, it } from "vitest";
import { SLIDER_GRID, createSliderControl, snapToGrid } from "../src/slider";

describe("snapToGrid", () => {
  it("keeps grid values", () => {
    for (const value of SLIDER_GRID) expect(snapToGrid(value)).toBe(value);
  });

  it("snaps arbitrary values to the nearest tenth", () => {
    expect(snapToGrid(0.37)).toBe(0.4);
    expect(snapToGrid(0.32)).toBe(0.3);
    expect(snapToGrid(0.05000001)).toBe(0.1);
  });

  it("clamps out-of-range and non-finite input", () => {
    expect(snapToGrid(-1)).toBe(0);
    expect(snapToGrid(2)).toBe(1);
    expect(snapToGrid(Number.NaN)).toBe(0.5);
  });
});

describe("createSliderControl", () => {
  it("exposes eleven integer steps so release always lands on the grid", () => {
    const control = createSliderControl(0.5);
    expect(control.input.min).toBe("0");
    expect(control.input.max).toBe("10");
    expect(control.input.step).toBe("1");
  });

  it("emits canonical grid floats on input", () => {
    const control = createSliderControl(0.5);
    const seen: number[] = [];
    control.onInput((value) => seen.push(value));
    for (const raw of ["0", "3", "7", "10"]) {
      control.input.value = raw;
      control.input.dispatchEvent(new Event("input"));
    }
    expect(seen).toEqual([0, 0.3, 0.7, 1]);
    expect(seen.every((v) => SLIDER_GRID.includes(v))).toBe(true);
  });

  it("set() snaps and updates the readout", () => {
    const control = createSliderControl(0.5);
    control.set(0.78);
    expect(control.value()).toBe(0.8);
    expect(control.element.querySelector("output")?.textContent).toBe("0.8");
  });
});
