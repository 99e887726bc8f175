"""(2,2) share generation for band-coded stego images.

Every stego pixel becomes one horizontal pair in each share. White pixels
(243-255) carry noise 0 at the same position in both shares; black pixels
(0-12) carry noise 255 at opposite positions. The value halves split X so
that fusion can restore it exactly:

    white, X even:  X/2 + 128            and X/2 + 128
    white, X odd:   floor(X/2) + 127     and floor(X/2) + 128
    black, X even:  X/2                  and X/2
    black, X odd:   floor(X/2)           and floor(X/2) + 1

Which half of the pair holds the value is a per-pixel pattern drawn from a
counter-based generator keyed by ``(seed, pixel index)``, so the output never
depends on evaluation order or thread count.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import List, NamedTuple, Tuple

import numpy as np

from stegovcs.bands import BLACK_MAX, BLACK_MIN, WHITE_MAX, WHITE_MIN, first_out_of_band, in_band
from stegovcs.errors import OutOfBand
from stegovcs.imaging.images import GrayImage, Share

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]

WHITE_NOISE = 0
BLACK_NOISE = 255

_PHI = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_SEED_MOD = 1 << 64


class PatternChoice(str, Enum):
    """Which half of the pair carries the value; the other half is noise."""

    LEFT = "left"
    RIGHT = "right"


def _splitmix64(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def pattern_bits(seed: int, indices: np.ndarray) -> np.ndarray:
    """Boolean array, True where the pixel at that index takes the right pattern."""
    key = np.uint64(seed % _SEED_MOD)
    counters = np.asarray(indices).astype(np.uint64) + np.uint64(1)
    with np.errstate(over="ignore"):
        mixed = _splitmix64(key + counters * _PHI)
    return (mixed >> np.uint64(63)).astype(bool)


def pattern_at(seed: int, p: int) -> PatternChoice:
    right = bool(pattern_bits(seed, np.array([p]))[0])
    return PatternChoice.RIGHT if right else PatternChoice.LEFT


def _value_halves(x: int) -> Pair:
    half, odd = divmod(x, 2)
    if x >= WHITE_MIN:
        return (half + 127, half + 128) if odd else (half + 128, half + 128)
    return half, half + odd


def split_pixel(x: int, pattern: PatternChoice) -> Tuple[Pair, Pair]:
    """Share pairs ``(pair1, pair2)`` for one stego pixel."""
    x = int(x)
    if not in_band(x):
        raise OutOfBand("stego pixel lies in the band gap", value=x)
    v1, v2 = _value_halves(x)
    left = PatternChoice(pattern) is PatternChoice.LEFT
    if x >= WHITE_MIN:
        if left:
            return (v1, WHITE_NOISE), (v2, WHITE_NOISE)
        return (WHITE_NOISE, v1), (WHITE_NOISE, v2)
    if left:
        return (v1, BLACK_NOISE), (BLACK_NOISE, v2)
    return (BLACK_NOISE, v1), (v2, BLACK_NOISE)


def split_arrays(values: np.ndarray, right: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorized ``split_pixel``: in-band values and patterns -> two (N, 2) pair arrays."""
    x = values.astype(np.int16)
    half, odd = x // 2, x & 1
    white = x >= WHITE_MIN
    val1 = np.where(white, np.where(odd == 1, half + 127, half + 128), half)
    val2 = np.where(white, half + 128, half + odd)
    noise = np.where(white, WHITE_NOISE, BLACK_NOISE)

    s1 = np.empty((x.size, 2), dtype=np.uint8)
    s2 = np.empty((x.size, 2), dtype=np.uint8)
    left = ~right
    s1[:, 0] = np.where(left, val1, noise)
    s1[:, 1] = np.where(left, noise, val1)
    # white noise sits at the same position in both shares, black noise at the opposite one
    s2_left = left == white
    s2[:, 0] = np.where(s2_left, val2, noise)
    s2[:, 1] = np.where(s2_left, noise, val2)
    return s1, s2


def generate_shares(stego: GrayImage, seed: int, workers: int = 1) -> Tuple[Share, Share]:
    """Expand an m x n stego image into two m x 2n shares."""
    index = first_out_of_band(stego.pixels)
    if index is not None:
        raise OutOfBand(
            "stego pixel lies in the band gap", index=index, value=int(stego.flat()[index])
        )

    flat = stego.flat()
    chunks = np.array_split(np.arange(flat.size), max(1, min(workers, flat.size)))

    def run(idx: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        return split_arrays(flat[idx], pattern_bits(seed, idx))

    if len(chunks) == 1:
        parts = [run(chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(pool.map(run, chunks))

    shape = (stego.height, 2 * stego.width)
    share1 = np.concatenate([p[0] for p in parts]).reshape(shape)
    share2 = np.concatenate([p[1] for p in parts]).reshape(shape)
    logger.debug(
        "generated %dx%d shares with seed %d on %d chunk(s)", shape[1], shape[0], seed, len(chunks)
    )
    return Share(share1), Share(share2)


class ShareTableRow(NamedTuple):
    value: int
    pattern: PatternChoice
    pair1: Pair
    pair2: Pair


def share_table() -> List[ShareTableRow]:
    """Every band value under both patterns, black band first."""
    rows = []
    for band in (range(BLACK_MIN, BLACK_MAX + 1), range(WHITE_MIN, WHITE_MAX + 1)):
        for pattern in PatternChoice:
            for x in band:
                rows.append(ShareTableRow(x, pattern, *split_pixel(x, pattern)))
    return rows
