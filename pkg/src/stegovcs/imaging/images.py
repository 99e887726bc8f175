"""Image value types: gray, binary cover, stego and share images.

Pixels live in a read-only ``(height, width)`` ``uint8`` array, row-major.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from stegovcs.bands import first_out_of_band
from stegovcs.errors import BandViolation, InvalidImage, NotBinary


@dataclass(frozen=True, eq=False)
class GrayImage:
    """An m x n grayscale image with intensities 0-255."""

    pixels: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.pixels)
        if arr.ndim != 2:
            raise InvalidImage(f"expected a 2-D pixel array, got {arr.ndim}-D")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InvalidImage(f"image must be at least 1x1, got {arr.shape[1]}x{arr.shape[0]}")
        if arr.dtype != np.uint8:
            if not np.issubdtype(arr.dtype, np.integer):
                raise InvalidImage(f"pixels must be integers, got {arr.dtype}")
            if arr.min() < 0 or arr.max() > 255:
                raise InvalidImage("pixel intensities must lie in 0-255")
        arr = np.array(arr, dtype=np.uint8, copy=True)
        arr.flags.writeable = False
        object.__setattr__(self, "pixels", arr)
        self._check()

    def _check(self) -> None:
        """Subclass invariant hook."""

    @classmethod
    def from_sequence(cls, width: int, height: int, values: Sequence[int]):
        if len(values) != width * height:
            raise InvalidImage(
                f"{width}x{height} image needs {width * height} pixels, got {len(values)}"
            )
        return cls(np.asarray(values, dtype=np.int64).reshape(height, width))

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    @property
    def size(self) -> int:
        return int(self.pixels.size)

    def flat(self) -> np.ndarray:
        return self.pixels.ravel()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and bool(
            np.array_equal(self.pixels, other.pixels)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.width}x{self.height})"


class BinaryImage(GrayImage):
    """Cover image: every pixel is 0 (black) or 255 (white)."""

    def _check(self) -> None:
        flat = self.pixels.ravel()
        bad = (flat != 0) & (flat != 255)
        if bad.any():
            index = int(np.flatnonzero(bad)[0])
            raise NotBinary("cover pixel is not 0 or 255", index=index, value=int(flat[index]))


class StegoImage(GrayImage):
    """Embedded image: every pixel lies in [0, 12] or [243, 255]."""

    def _check(self) -> None:
        index = first_out_of_band(self.pixels)
        if index is not None:
            raise BandViolation(
                "pixel lies in the band gap", index=index, value=int(self.pixels.ravel()[index])
            )


class Share(GrayImage):
    """One m x 2n share; columns pair up as (half1, half2) per stego pixel."""

    def _check(self) -> None:
        if self.width % 2:
            raise InvalidImage(f"share width must be even, got {self.width}")

    def pairs(self) -> np.ndarray:
        """Pixel pairs as an (m*n, 2) array."""
        return self.pixels.reshape(-1, 2)
