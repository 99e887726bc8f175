"""Black and white stego bands and the gap between them."""

from typing import Optional

import numpy as np

BLACK_MIN, BLACK_MAX = 0, 12
WHITE_MIN, WHITE_MAX = 243, 255
BAND_CARDINALITY = BLACK_MAX - BLACK_MIN + 1  # 13, same for both bands


def is_black(value: int) -> bool:
    return BLACK_MIN <= value <= BLACK_MAX


def is_white(value: int) -> bool:
    return WHITE_MIN <= value <= WHITE_MAX


def in_band(value: int) -> bool:
    return is_black(value) or is_white(value)


def first_out_of_band(pixels: np.ndarray) -> Optional[int]:
    """Row-major index of the first pixel in the gap, or None."""
    flat = np.asarray(pixels).ravel()
    gap = (flat > BLACK_MAX) & (flat < WHITE_MIN)
    if not gap.any():
        return None
    return int(np.flatnonzero(gap)[0])
