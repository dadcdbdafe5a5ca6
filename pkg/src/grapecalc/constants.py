"""Lattice geometry and the one global sign convention.

Hex cells are integer pairs (x, y) with geometric center
(x + y/2, y*sqrt(3)/2), so two cells are tangent exactly when their
offset is one of the six NEIGHBOR_OFFSETS.  Every tangency between two
grapes stands for a full twist, and the twist's handedness is read off
the slope of the line joining the circle centers:

  * offsets (0, 1) / (0, -1)  -- positive slope, right-handed twist
  * offsets (1, 0) / (-1, 0)  -- slope zero, left-handed twist
  * offsets (1, -1) / (-1, 1) -- negative slope, left-handed twist

The sign each handedness contributes to the linking matrix is a global
orientation choice.  It is calibrated once, by requiring the linking
form of the shipped C2 cluster (two offset rows of four grapes) to be
congruent to the 2-fold branched-cover form of the (3,5) torus knot
built in grapecalc.covers: right-handed -> -1, left-handed -> +1.
With the opposite pairing the C2 determinant comes out 81 instead of 1,
so the two conventions are genuinely inequivalent and only this one is
consistent with the branched-cover oracle.
"""

from __future__ import annotations

# The six tangency directions, fixed enumeration order used everywhere
# a deterministic direction order is needed.
NEIGHBOR_OFFSETS: tuple[tuple[int, int], ...] = (
    (1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1),
)

# Compass-ish names for the six directions in trace files and wire payloads.
DIRECTION_NAMES: dict[tuple[int, int], str] = {
    (1, 0): "E",
    (-1, 0): "W",
    (0, 1): "NE",
    (0, -1): "SW",
    (1, -1): "SE",
    (-1, 1): "NW",
}
DIRECTION_BY_NAME: dict[str, tuple[int, int]] = {v: k for k, v in DIRECTION_NAMES.items()}

# Calibrated twist signs, keyed by slope class of the center line.
RIGHT_HANDED_SIGN = -1   # positive slope
LEFT_HANDED_SIGN = +1    # zero or negative slope

# Framing every grape carries.
GRAPE_FRAMING = -2


def twist_sign(offset: tuple[int, int]) -> int:
    """Linking-matrix entry contributed by a tangency along ``offset``."""
    if offset in ((0, 1), (0, -1)):
        return RIGHT_HANDED_SIGN
    if offset not in NEIGHBOR_OFFSETS:
        raise ValueError(f"{offset} is not a tangency direction")
    return LEFT_HANDED_SIGN
