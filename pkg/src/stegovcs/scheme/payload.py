"""Secret payloads and the 5-byte frame that tells the receiver their size."""

import struct
from dataclasses import dataclass
from enum import Enum

import numpy as np

from stegovcs.errors import BadHeader, InvalidPayload, PayloadTooLarge
from stegovcs.imaging.images import GrayImage

HEADER = struct.Struct(">BHH")
HEADER_SIZE = HEADER.size  # 5
MAX_DIMENSION = 0xFFFF


class PayloadKind(str, Enum):
    MESSAGE = "message"
    IMAGE = "image"

    @property
    def tag(self) -> int:
        return _TAGS[self]


_TAGS = {PayloadKind.MESSAGE: 0x4D, PayloadKind.IMAGE: 0x49}
_KINDS = {tag: kind for kind, tag in _TAGS.items()}


@dataclass(frozen=True)
class Payload:
    """A secret message (``height == 1``) or a secret image, body row-major."""

    kind: PayloadKind
    width: int
    height: int
    body: bytes

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", PayloadKind(self.kind))
        object.__setattr__(self, "body", bytes(self.body))
        if self.width < 0 or self.height < 0:
            raise InvalidPayload(f"negative dimensions {self.width}x{self.height}")
        if len(self.body) != self.width * self.height:
            raise InvalidPayload(
                f"body has {len(self.body)} bytes, dimensions say {self.width * self.height}"
            )
        if self.kind is PayloadKind.MESSAGE and self.height != 1:
            raise InvalidPayload("a message payload must have height 1")
        if self.kind is PayloadKind.IMAGE and (self.width < 1 or self.height < 1):
            raise InvalidPayload("an image payload needs at least one pixel")

    @classmethod
    def from_message(cls, data: bytes) -> "Payload":
        return cls(PayloadKind.MESSAGE, len(data), 1, data)

    @classmethod
    def from_image(cls, img: GrayImage) -> "Payload":
        return cls(PayloadKind.IMAGE, img.width, img.height, img.pixels.tobytes())

    def to_image(self) -> GrayImage:
        if self.kind is not PayloadKind.IMAGE:
            raise InvalidPayload("payload is a message, not an image")
        return GrayImage(np.frombuffer(self.body, dtype=np.uint8).reshape(self.height, self.width))

    def __repr__(self) -> str:
        return f"Payload({self.kind.value}, {self.width}x{self.height})"


def frame_payload(payload: Payload) -> bytes:
    """Header (kind tag, 16-bit big-endian width and height) followed by the body."""
    if payload.width > MAX_DIMENSION or payload.height > MAX_DIMENSION:
        raise PayloadTooLarge(
            f"{payload.width}x{payload.height} does not fit a {MAX_DIMENSION} header field"
        )
    return HEADER.pack(payload.kind.tag, payload.width, payload.height) + payload.body


def parse_header(header: bytes) -> tuple:
    """Decode the 5 header bytes into ``(kind, width, height)``."""
    if len(header) < HEADER_SIZE:
        raise BadHeader(f"frame header needs {HEADER_SIZE} bytes, got {len(header)}")
    tag, width, height = HEADER.unpack(header[:HEADER_SIZE])
    if tag not in _KINDS:
        raise BadHeader(f"unknown payload kind tag 0x{tag:02X}")
    kind = _KINDS[tag]
    if kind is PayloadKind.MESSAGE and height != 1:
        raise BadHeader(f"message frame declares height {height}")
    if kind is PayloadKind.IMAGE and (width == 0 or height == 0):
        raise BadHeader(f"image frame declares empty dimensions {width}x{height}")
    return kind, width, height


def unframe_payload(data: bytes) -> Payload:
    kind, width, height = parse_header(data)
    body = data[HEADER_SIZE : HEADER_SIZE + width * height]
    if len(body) != width * height:
        raise BadHeader(f"frame declares {width * height} body bytes, only {len(body)} present")
    return Payload(kind, width, height, body)
