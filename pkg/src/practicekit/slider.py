"""The 11-point difficulty control grid: 0.0 (very easy) to 1.0 (very hard)
in steps of 0.1. All slider input is validated and snapped to the grid's
canonical floats before use.
"""

from __future__ import annotations

import math

from .errors import SliderOffGridError

GRID = tuple(i / 10 for i in range(11))

# JSON round-trips give us the float nearest to e.g. "0.3"; accept anything
# within this distance of a grid point and snap it.
_GRID_TOLERANCE = 1e-9


def snap(value: float) -> float:
    """Return the canonical grid float for ``value``; reject off-grid input."""
    try:
        value = float(value)
    except (TypeError, ValueError):
        value = math.nan
    if math.isfinite(value):
        scaled = value * 10.0
        index = round(scaled)
        if 0 <= index <= 10 and abs(scaled - index) < _GRID_TOLERANCE:
            return GRID[index]
    raise SliderOffGridError(
        f"slider value {value!r} is not on the 0.0..1.0 grid with step 0.1",
        detail={"legal_values": list(GRID)},
    )


def tenths(value: float) -> int:
    """Grid index 0..10 of a valid slider value."""
    return round(snap(value) * 10.0)
