"""The embedding and (2,2) sharing scheme."""

from stegovcs.scheme.decode import (
    PixelClass,
    classify_pair,
    decode_shares,
    fuse_pair,
    fuse_pair_logical,
    overlay_weights,
    stack_or,
    visual_decode,
)
from stegovcs.scheme.embed import capacity, embed, embed_bit_pair
from stegovcs.scheme.extract import extract_bit_pair, extract_payload, restore_cover
from stegovcs.scheme.payload import Payload, PayloadKind, frame_payload, unframe_payload
from stegovcs.scheme.position_hash import PositionPair, position_grid, position_pair
from stegovcs.scheme.shares import (
    PatternChoice,
    generate_shares,
    pattern_at,
    share_table,
    split_pixel,
)

__all__ = [
    "Payload",
    "PayloadKind",
    "PatternChoice",
    "PixelClass",
    "PositionPair",
    "capacity",
    "classify_pair",
    "decode_shares",
    "embed",
    "embed_bit_pair",
    "extract_bit_pair",
    "extract_payload",
    "frame_payload",
    "fuse_pair",
    "fuse_pair_logical",
    "generate_shares",
    "overlay_weights",
    "pattern_at",
    "position_grid",
    "position_pair",
    "restore_cover",
    "share_table",
    "split_pixel",
    "stack_or",
    "unframe_payload",
    "visual_decode",
]
