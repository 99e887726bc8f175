"""Payload extraction and cover restoration from a decoded stego image."""

import logging
from typing import Tuple

import numpy as np

from stegovcs.bands import WHITE_MIN, first_out_of_band, in_band
from stegovcs.errors import BadHeader, BandViolation, BodyOverrun
from stegovcs.imaging.images import BinaryImage, GrayImage
from stegovcs.scheme.embed import PIXELS_PER_BYTE
from stegovcs.scheme.payload import HEADER_SIZE, Payload, parse_header
from stegovcs.scheme.position_hash import PositionPair, position_grid

logger = logging.getLogger(__name__)

_PAIR_WEIGHTS = np.array([64, 16, 4, 1], dtype=np.int64)


def _require_bands(img: GrayImage) -> None:
    index = first_out_of_band(img.pixels)
    if index is not None:
        raise BandViolation("pixel lies in the band gap", index=index, value=int(img.flat()[index]))


def extract_bit_pair(stego_pixel: int, pos: PositionPair) -> Tuple[int, int]:
    """Bits at ``pos.p_first`` and ``pos.p_second``; inverse of ``embed_bit_pair``."""
    value = int(stego_pixel)
    if not in_band(value):
        raise BandViolation("pixel lies in the band gap", value=value)
    return (value >> pos.p_first) & 1, (value >> pos.p_second) & 1


def _read_bytes(
    flat: np.ndarray, first: np.ndarray, second: np.ndarray, start: int, count: int
) -> bytes:
    lo, hi = PIXELS_PER_BYTE * start, PIXELS_PER_BYTE * (start + count)
    segment = flat[lo:hi]
    b1 = (segment >> first[lo:hi]) & 1
    b2 = (segment >> second[lo:hi]) & 1
    pairs = ((b1 << 1) | b2).astype(np.int64).reshape(count, PIXELS_PER_BYTE)
    return (pairs @ _PAIR_WEIGHTS).astype(np.uint8).tobytes()


def extract_payload(stego: GrayImage) -> Payload:
    """Read the 5-byte frame from pixels 0-19, then the body four pixels per byte.

    Only the hashed lower-nibble bits are read. Gap pixels are reported by
    ``restore_cover``, not here.
    """
    flat = stego.flat()
    header_pixels = PIXELS_PER_BYTE * HEADER_SIZE
    if flat.size < header_pixels:
        raise BadHeader(f"image has {flat.size} pixels, a frame header needs {header_pixels}")

    first, second = position_grid(stego.height, stego.width)
    kind, width, height = parse_header(_read_bytes(flat, first, second, 0, HEADER_SIZE))
    length = width * height
    needed = PIXELS_PER_BYTE * (HEADER_SIZE + length)
    if needed > flat.size:
        raise BodyOverrun(needed, flat.size)

    body = _read_bytes(flat, first, second, HEADER_SIZE, length)
    logger.debug("extracted %s payload %dx%d", kind.value, width, height)
    return Payload(kind, width, height, body)


def restore_cover(stego: GrayImage) -> BinaryImage:
    """Threshold each band back to its binary colour: white band to 255, black band to 0."""
    _require_bands(stego)
    return BinaryImage(np.where(stego.pixels >= WHITE_MIN, 255, 0))
