"""Image types and the PBM/PGM container."""

from stegovcs.imaging.images import BinaryImage, GrayImage, Share, StegoImage
from stegovcs.imaging.pnm import (
    PnmFormat,
    decode_pnm,
    encode_pnm,
    read_pnm,
    validate_binary,
    write_pnm,
)

__all__ = [
    "BinaryImage",
    "GrayImage",
    "PnmFormat",
    "Share",
    "StegoImage",
    "decode_pnm",
    "encode_pnm",
    "read_pnm",
    "validate_binary",
    "write_pnm",
]
