"""Embedding positions inside the lower nibble of each cover pixel.

Sender and receiver evaluate the same key-free function, so nothing about the
positions has to travel with the shares. Bit 0 is the least significant bit.
"""

from typing import NamedTuple, Tuple

import numpy as np


class PositionPair(NamedTuple):
    p_first: int
    p_second: int


def position_pair(p: int, i: int, j: int) -> PositionPair:
    """Positions for pixel ``p`` at row ``i``, column ``j`` (``p == i * width + j``)."""
    first = (p % ((i + 1) + (j + 1))) % 4
    return PositionPair(first, (first + 1) % 4)


def position_grid(height: int, width: int) -> Tuple[np.ndarray, np.ndarray]:
    """Row-major ``(p_first, p_second)`` arrays for every pixel of an image."""
    rows, cols = np.indices((height, width), dtype=np.int64)
    p = rows * width + cols
    first = (p % (rows + cols + 2)) % 4
    return first.ravel().astype(np.uint8), ((first + 1) % 4).ravel().astype(np.uint8)
