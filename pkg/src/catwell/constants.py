"""Unit constants."""

import math

#: Degrees per 100 ft of hole per unit curvature (1/ft), rounded as is customary
#: in well planning. Build rate B = BUILD_CONSTANT * C and radius R = BUILD_CONSTANT / B.
BUILD_CONSTANT = 5730.0

#: The unrounded value, 100 * 180 / pi.
EXACT_BUILD_CONSTANT = 18000.0 / math.pi


def build_constant(exact: bool = False) -> float:
    return EXACT_BUILD_CONSTANT if exact else BUILD_CONSTANT
