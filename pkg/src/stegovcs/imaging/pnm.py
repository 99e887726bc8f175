"""PBM/PGM (Netpbm) reader and writer.

PBM polarity follows the Netpbm ink convention: a 1 bit is black (pixel 0),
a 0 bit is white (pixel 255). Output always uses maxval 255.
"""

import re
from enum import Enum
from pathlib import Path
from typing import List, Tuple, Union

import numpy as np

from stegovcs.errors import MalformedHeader, NotBinary, TruncatedData, UnsupportedMaxval
from stegovcs.imaging.images import BinaryImage, GrayImage

MAGICS = (b"P1", b"P2", b"P4", b"P5")
_COMMENT = re.compile(rb"#[^\r\n]*")
_DELIMITERS = (b" ", b"\t", b"\n", b"\r", b"\v", b"\f", b"#")


class PnmFormat(str, Enum):
    PBM = "pbm"
    PBM_ASCII = "pbm-ascii"
    PGM_ASCII = "pgm-ascii"
    PGM_RAW = "pgm-raw"


def is_pnm(data: bytes) -> bool:
    """True when ``data`` starts with a PBM/PGM magic token."""
    return len(data) >= 3 and data[:2] in MAGICS and data[2:3].isspace()


def _read_header(data: bytes, count: int) -> Tuple[List[int], int]:
    """Read ``count`` integer tokens after the magic; return them and the raster offset."""
    tokens: List[int] = []
    pos = 2
    while len(tokens) < count:
        if pos >= len(data):
            raise MalformedHeader("header ends before all dimensions were read")
        c = data[pos : pos + 1]
        if c.isspace():
            pos += 1
        elif c == b"#":
            while pos < len(data) and data[pos : pos + 1] not in (b"\n", b"\r"):
                pos += 1
        else:
            start = pos
            while pos < len(data) and data[pos : pos + 1] not in _DELIMITERS:
                pos += 1
            token = data[start:pos]
            if not token.isdigit():
                raise MalformedHeader(f"bad header token {token!r}")
            tokens.append(int(token))
    # exactly one whitespace byte separates the header from a binary raster
    if pos < len(data) and data[pos : pos + 1].isspace():
        pos += 1
    return tokens, pos


def _scale(samples: np.ndarray, maxval: int) -> np.ndarray:
    if maxval == 255:
        return samples
    return (samples.astype(np.int64) * 255 * 2 + maxval) // (2 * maxval)


def decode_pnm(data: bytes) -> GrayImage:
    """Parse a P1/P2/P4/P5 byte string into a GrayImage."""
    magic = data[:2]
    if magic not in MAGICS:
        raise MalformedHeader(f"unknown magic {magic!r}")
    gray = magic in (b"P2", b"P5")
    (width, height, *rest), offset = _read_header(data, 3 if gray else 2)
    if width < 1 or height < 1:
        raise MalformedHeader(f"invalid dimensions {width}x{height}")
    maxval = rest[0] if gray else 1
    if maxval > 255:
        raise UnsupportedMaxval(maxval)
    if maxval < 1:
        raise MalformedHeader("maxval must be at least 1")
    expected = width * height
    body = data[offset:]

    if magic == b"P5":
        if len(body) < expected:
            raise TruncatedData(expected, len(body))
        samples = np.frombuffer(body, dtype=np.uint8, count=expected)
    elif magic == b"P4":
        row_bytes = (width + 7) // 8
        if len(body) < row_bytes * height:
            raise TruncatedData(expected, len(body) // row_bytes * width)
        packed = np.frombuffer(body, dtype=np.uint8, count=row_bytes * height)
        bits = np.unpackbits(packed.reshape(height, row_bytes), axis=1)[:, :width]
        samples = np.where(bits == 1, 0, 255)
    elif magic == b"P1":
        raw = np.frombuffer(_COMMENT.sub(b"", body), dtype=np.uint8)
        digits = (raw == ord("0")) | (raw == ord("1"))
        stray = ~digits & ~np.isin(raw, np.frombuffer(b" \t\r\n\v\f", dtype=np.uint8))
        if stray.any():
            raise MalformedHeader(f"unexpected byte {bytes(raw[stray][:1])!r} in PBM raster")
        bits = raw[digits] - ord("0")
        if bits.size < expected:
            raise TruncatedData(expected, int(bits.size))
        samples = np.where(bits[:expected] == 1, 0, 255)
    else:
        tokens = _COMMENT.sub(b"", body).split()
        if len(tokens) < expected:
            raise TruncatedData(expected, len(tokens))
        try:
            values = np.array([int(t) for t in tokens[:expected]], dtype=np.int64)
        except (ValueError, OverflowError) as exc:
            raise MalformedHeader(f"bad PGM sample: {exc}") from exc
        if values.min() < 0:
            raise MalformedHeader("negative PGM sample")
        samples = values

    if gray:
        if int(np.max(samples)) > maxval:
            raise MalformedHeader(f"PGM sample outside 0-{maxval}")
        samples = _scale(samples, maxval)
    return GrayImage(np.asarray(samples).reshape(height, width))


def encode_pnm(img: GrayImage, fmt: Union[PnmFormat, str] = PnmFormat.PGM_RAW) -> bytes:
    """Serialize an image; PBM formats require a binary image."""
    fmt = PnmFormat(fmt)
    pixels = img.pixels
    header = f"{img.width} {img.height}\n"
    if fmt in (PnmFormat.PBM, PnmFormat.PBM_ASCII):
        validate_binary(img)
        ink = (pixels == 0).astype(np.uint8)
        if fmt is PnmFormat.PBM:
            return b"P4\n" + header.encode() + np.packbits(ink, axis=1).tobytes()
        rows = "\n".join(" ".join(map(str, row)) for row in ink.tolist())
        return f"P1\n{header}{rows}\n".encode()
    if fmt is PnmFormat.PGM_RAW:
        return b"P5\n" + f"{header}255\n".encode() + pixels.tobytes()
    rows = "\n".join(" ".join(map(str, row)) for row in pixels.tolist())
    return f"P2\n{header}255\n{rows}\n".encode()


def validate_binary(img: GrayImage) -> BinaryImage:
    """Retype ``img`` as a cover; NotBinary names the first offending pixel."""
    if isinstance(img, BinaryImage):
        return img
    flat = img.flat()
    bad = (flat != 0) & (flat != 255)
    if bad.any():
        index = int(np.flatnonzero(bad)[0])
        raise NotBinary("pixel is not 0 or 255", index=index, value=int(flat[index]))
    return BinaryImage(img.pixels)


def read_pnm(path: Union[str, Path]) -> GrayImage:
    return decode_pnm(Path(path).read_bytes())


def write_pnm(path: Union[str, Path], img: GrayImage, fmt: Union[PnmFormat, str]) -> None:
    Path(path).write_bytes(encode_pnm(img, fmt))
