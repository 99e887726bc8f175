"""Share fusion back to the exact stego image, and the OR-stacked overlay.

A pair is white when the shares agree on at least one half (the common 0
noise); otherwise it is black. White pairs fuse as ``a + b - 256`` when the
two value halves are equal and ``a + b - 254`` when they differ; black pairs
fuse as the sum of the two non-255 halves. A fusion is only accepted when
re-splitting the result reproduces the observed pairs, in either share order.
"""

from enum import Enum
from typing import Tuple

import numpy as np

from stegovcs.bands import WHITE_MIN, in_band
from stegovcs.errors import DimensionMismatch, InconsistentPair
from stegovcs.imaging.images import BinaryImage, GrayImage, StegoImage
from stegovcs.scheme.shares import (
    BLACK_NOISE,
    WHITE_NOISE,
    Pair,
    PatternChoice,
    split_arrays,
    split_pixel,
)

VISUAL_THRESHOLD = WHITE_MIN


class PixelClass(str, Enum):
    BLACK = "black"
    WHITE = "white"


def classify_pair(pair1: Pair, pair2: Pair) -> PixelClass:
    if pair1[0] == pair2[0] or pair1[1] == pair2[1]:
        return PixelClass.WHITE
    return PixelClass.BLACK


def _resplits(x: int, pair1: Pair, pair2: Pair) -> bool:
    observed = (tuple(pair1), tuple(pair2))
    for pattern in PatternChoice:
        a, b = split_pixel(x, pattern)
        if observed in ((a, b), (b, a)):
            return True
    return False


def fuse_pair(pair1: Pair, pair2: Pair) -> int:
    """Stego value encoded by two share pairs."""
    pair1, pair2 = tuple(int(v) for v in pair1), tuple(int(v) for v in pair2)
    if classify_pair(pair1, pair2) is PixelClass.WHITE:
        if pair1[1] == pair2[1] == WHITE_NOISE:
            a, b = pair1[0], pair2[0]
        elif pair1[0] == pair2[0] == WHITE_NOISE:
            a, b = pair1[1], pair2[1]
        else:
            raise InconsistentPair(f"white pair {pair1}/{pair2} has no common 0 noise")
        value = a + b - 256 if a == b else a + b - 254
    else:
        a = pair1[0] if pair1[1] == BLACK_NOISE else pair1[1]
        b = pair2[1] if pair2[0] == BLACK_NOISE else pair2[0]
        value = a + b
    if not in_band(value) or not _resplits(value, pair1, pair2):
        raise InconsistentPair(f"pairs {pair1}/{pair2} match neither share form")
    return value


def fuse_pair_logical(pair1: Pair, pair2: Pair) -> int:
    """Fusion written with AND for black pairs, as read off stacked transparencies."""
    (s11, s12), (s21, s22) = pair1, pair2
    if classify_pair(pair1, pair2) is PixelClass.BLACK:
        return (s11 & s21) + (s12 & s22)
    if s11 == 0:
        return s12 + s22 - 256 if s12 == s22 else s12 + s22 - 254
    return s11 + s21 - 256 if s11 == s21 else s11 + s21 - 254


def _check_dims(share1: GrayImage, share2: GrayImage) -> None:
    if share1.pixels.shape != share2.pixels.shape:
        raise DimensionMismatch(
            f"shares are {share1.width}x{share1.height} and {share2.width}x{share2.height}"
        )
    if share1.width % 2:
        raise DimensionMismatch(f"share width {share1.width} is odd")


def fuse_arrays(pairs1: np.ndarray, pairs2: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorized fusion of (N, 2) pair arrays; returns values and a validity mask."""
    a = pairs1.astype(np.int16)
    b = pairs2.astype(np.int16)
    white = (a[:, 0] == b[:, 0]) | (a[:, 1] == b[:, 1])

    noise_right = (a[:, 1] == WHITE_NOISE) & (b[:, 1] == WHITE_NOISE)
    wa = np.where(noise_right, a[:, 0], a[:, 1])
    wb = np.where(noise_right, b[:, 0], b[:, 1])
    white_value = np.where(wa == wb, wa + wb - 256, wa + wb - 254)

    ba = np.where(a[:, 1] == BLACK_NOISE, a[:, 0], a[:, 1])
    bb = np.where(b[:, 0] == BLACK_NOISE, b[:, 1], b[:, 0])
    values = np.where(white, white_value, ba + bb)

    valid = ((values >= 0) & (values <= 12)) | ((values >= WHITE_MIN) & (values <= 255))
    candidate = np.where(valid, values, 0)
    matches = np.zeros(values.shape, dtype=bool)
    for right in (False, True):
        r1, r2 = split_arrays(candidate, np.full(values.shape, right))
        same = np.all(pairs1 == r1, axis=1) & np.all(pairs2 == r2, axis=1)
        swapped = np.all(pairs1 == r2, axis=1) & np.all(pairs2 == r1, axis=1)
        matches |= same | swapped
    return candidate.astype(np.uint8), valid & matches


def decode_shares(share1: GrayImage, share2: GrayImage) -> StegoImage:
    """Fuse two m x 2n shares into the m x n stego image. Share order is irrelevant."""
    _check_dims(share1, share2)
    pairs1 = share1.pixels.reshape(-1, 2)
    pairs2 = share2.pixels.reshape(-1, 2)
    values, ok = fuse_arrays(pairs1, pairs2)
    if not ok.all():
        index = int(np.flatnonzero(~ok)[0])
        raise InconsistentPair(
            f"pairs {tuple(pairs1[index].tolist())}/{tuple(pairs2[index].tolist())} "
            "match neither share form",
            index=index,
        )
    return StegoImage(values.reshape(share1.height, share1.width // 2))


def stack_or(share1: GrayImage, share2: GrayImage) -> GrayImage:
    """Bitwise OR of aligned shares, the digital form of stacking transparencies."""
    _check_dims(share1, share2)
    return GrayImage(np.bitwise_or(share1.pixels, share2.pixels))


def overlay_weights(overlay: GrayImage) -> np.ndarray:
    """Per-pair Hamming weight (0-2) of an overlay thresholded at the white band."""
    dark = (overlay.pixels >= VISUAL_THRESHOLD).astype(np.uint8)
    return dark.reshape(overlay.height, -1, 2).sum(axis=2)


def visual_decode(overlay: GrayImage) -> BinaryImage:
    """Read the overlay by eye: weight >= 2 is black, weight <= 1 is white."""
    return BinaryImage(np.where(overlay_weights(overlay) >= 2, 0, 255))
