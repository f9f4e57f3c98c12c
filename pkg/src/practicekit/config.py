"""Engine configuration and its key-value file format.

The file is plain ``key = value`` lines; ``#`` starts a comment. Example:

    k_learner = 0.4
    k_item = 0.2
    beta = 2.0
    delta = 0.85
    band_thresholds = 0.2, 0.4, 0.6, 0.8
    seed = 0
    recency_window = 10
    initial_rating = 0.0
    adapt_item_difficulty = true
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path

from .errors import ConfigError


@dataclass(frozen=True)
class EngineConfig:
    k_learner: float = 0.4
    k_item: float = 0.2
    beta: float = 2.0
    delta: float = 0.85
    band_thresholds: tuple[float, float, float, float] = (0.2, 0.4, 0.6, 0.8)
    seed: int = 0
    recency_window: int = 10
    initial_rating: float = 0.0
    adapt_item_difficulty: bool = True

    def __post_init__(self) -> None:
        if not self.k_learner > 0.0:
            raise ConfigError(f"k_learner must be positive, got {self.k_learner!r}")
        if not self.k_item > 0.0:
            raise ConfigError(f"k_item must be positive, got {self.k_item!r}")
        if not self.beta > 0.0:
            raise ConfigError(f"beta must be positive, got {self.beta!r}")
        if len(self.band_thresholds) != 4 or any(
            not 0.0 < t < 1.0 for t in self.band_thresholds
        ) or list(self.band_thresholds) != sorted(set(self.band_thresholds)):
            raise ConfigError(
                "band_thresholds must be 4 strictly increasing values in (0, 1), "
                f"got {self.band_thresholds!r}"
            )
        if self.recency_window < 0:
            raise ConfigError(f"recency_window must be >= 0, got {self.recency_window!r}")


def _parse_bool(raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ("true", "yes", "on", "1"):
        return True
    if lowered in ("false", "no", "off", "0"):
        return False
    raise ValueError(f"not a boolean: {raw!r}")


def load_config(path: str | Path) -> EngineConfig:
    """Parse a key-value config file into an EngineConfig."""
    known = {f.name: f.type for f in fields(EngineConfig)}
    values: dict[str, object] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, raw = (part.strip() for part in line.split("=", 1))
        if key not in known:
            raise ConfigError(f"{path}:{lineno}: unknown config key {key!r}")
        try:
            if key == "band_thresholds":
                values[key] = tuple(float(part) for part in raw.split(","))
            elif key == "adapt_item_difficulty":
                values[key] = _parse_bool(raw)
            elif key in ("seed", "recency_window"):
                values[key] = int(raw)
            else:
                values[key] = float(raw)
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key}: {exc}") from exc
    return EngineConfig(**values)


def dump_config(config: EngineConfig) -> str:
    """Render a config back into the key-value file format."""
    lines = []
    for f in fields(EngineConfig):
        value = getattr(config, f.name)
        if f.name == "band_thresholds":
            rendered = ", ".join(repr(t) for t in value)
        elif f.name == "adapt_item_difficulty":
            rendered = "true" if value else "false"
        else:
            rendered = repr(value)
        lines.append(f"{f.name} = {rendered}")
    return "\n".join(lines) + "\n"
