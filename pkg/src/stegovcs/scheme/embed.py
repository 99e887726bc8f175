"""Two-bit embedding of the framed payload into a binary cover.

Framed byte ``k`` occupies cover pixels ``4k .. 4k+3`` in row-major order, its
bit pairs (7-6, 5-4, 3-2, 1-0) written at the hashed lower-nibble positions.
"""

import logging
from typing import Tuple

import numpy as np

from stegovcs.errors import CapacityExceeded
from stegovcs.imaging.images import GrayImage, StegoImage
from stegovcs.imaging.pnm import validate_binary
from stegovcs.scheme.payload import HEADER_SIZE, Payload, frame_payload
from stegovcs.scheme.position_hash import PositionPair, position_grid

logger = logging.getLogger(__name__)

PIXELS_PER_BYTE = 4
_PAIR_SHIFTS = np.array([6, 4, 2, 0], dtype=np.uint8)


def capacity(width: int, height: int) -> int:
    """Largest payload body (bytes) a ``width x height`` cover can carry."""
    return max(width * height // PIXELS_PER_BYTE - HEADER_SIZE, 0)


def embed_bit_pair(cover_pixel: int, bits: Tuple[int, int], pos: PositionPair) -> int:
    """Write ``bits[0]`` at ``pos.p_first`` and ``bits[1]`` at ``pos.p_second``."""
    value = int(cover_pixel)
    for bit, position in zip(bits, pos):
        value = (value & ~(1 << position)) | ((bit & 1) << position)
    return value


def byte_to_pairs(data: np.ndarray) -> np.ndarray:
    """MSB-first 2-bit groups: shape (n,) bytes -> (4n,) values 0-3."""
    return ((data[:, None] >> _PAIR_SHIFTS) & 3).ravel().astype(np.uint8)


def embed(cover: GrayImage, payload: Payload) -> StegoImage:
    cover = validate_binary(cover)
    framed = np.frombuffer(frame_payload(payload), dtype=np.uint8)
    needed = PIXELS_PER_BYTE * framed.size
    if needed > cover.size:
        raise CapacityExceeded(needed, cover.size)

    first, second = position_grid(cover.height, cover.width)
    first, second = first[:needed], second[:needed]
    pairs = byte_to_pairs(framed)
    b1, b2 = pairs >> 1, pairs & 1

    flat = cover.flat().copy()
    segment = flat[:needed]
    cleared = segment & ~((np.uint8(1) << first) | (np.uint8(1) << second))
    flat[:needed] = cleared | (b1 << first) | (b2 << second)

    logger.debug("embedded %d framed bytes into %d of %d pixels", framed.size, needed, cover.size)
    return StegoImage(flat.reshape(cover.height, cover.width))

