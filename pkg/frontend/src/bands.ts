// The five mastery bands with the colour+icon pairing the UI shows next
// to every band name: level names alone are unclear to many learners, so
// each chip carries an ordered colour and a star count.

export interface BandSpec {
  ordinal: number;
  label: string;
  display: string;
  color: string;
  icon: string;
}

export const BANDS: BandSpec[] = [
  { ordinal: 0, label: "Novice", display: "Novice", color: "#d7e9f7", icon: "★" },
  { ordinal: 1, label: "AdvancedBeginner", display: "Advanced Beginner", color: "#a8cdea", icon: "★★" },
  { ordinal: 2, label: "Competent", display: "Competent", color: "#6ba3d0", icon: "★★★" },
  { ordinal: 3, label: "Proficient", display: "Proficient", color: "#3a76ab", icon: "★★★★" },
  { ordinal: 4, label: "Expert", display: "Expert", color: "#174f7c", icon: "★★★★★" },
];

export function bandByLabel(label: string): BandSpec {
  const band = BANDS.find((b) => b.label === label);
  if (!band) throw new Error(`unknown band label: ${label}`);
  return band;
}

export function bandChip(label: string): HTMLSpanElement {
  const band = bandByLabel(label);
  const chip = document.createElement("span");
  chip.className = "band-chip";
  chip.dataset.band = band.label;
  chip.style.backgroundColor = band.color;
  chip.style.color = band.ordinal >= 3 ? "#ffffff" : "#13324b";

  const icon = document.createElement("span");
  icon.className = "band-chip-icon";
  icon.textContent = band.icon;
  const text = document.createElement("span");
  text.textContent = band.display;
  chip.append(icon, text);
  return chip;
}
