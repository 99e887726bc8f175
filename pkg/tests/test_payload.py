import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from stegovcs.errors import BadHeader, InvalidPayload, PayloadTooLarge
from stegovcs.imaging.images import GrayImage
from stegovcs.scheme.payload import Payload, PayloadKind, frame_payload, unframe_payload


def test_frame_message():
    framed = frame_payload(Payload.from_message(b"Hi"))
    assert framed == bytes([0x4D, 0x00, 0x02, 0x00, 0x01, 0x48, 0x69])


def test_frame_image():
    img = GrayImage.from_sequence(2, 2, [10, 20, 30, 40])
    framed = frame_payload(Payload.from_image(img))
    assert framed == bytes([0x49, 0x00, 0x02, 0x00, 0x02, 10, 20, 30, 40])


def test_dimension_beyond_header_field():
    with pytest.raises(PayloadTooLarge):
        frame_payload(Payload.from_message(bytes(70000)))


@given(body=st.binary(max_size=300))
def test_message_framing_identity(body):
    payload = Payload.from_message(body)
    assert unframe_payload(frame_payload(payload)) == payload


def test_image_framing_identity(rng):
    img = GrayImage(rng.integers(0, 256, size=(5, 3)))
    payload = Payload.from_image(img)
    restored = unframe_payload(frame_payload(payload))
    assert restored == payload
    assert restored.to_image() == img


@pytest.mark.parametrize(
    "kind, width, height, body",
    [
        (PayloadKind.MESSAGE, 2, 2, b"abcd"),
        (PayloadKind.MESSAGE, 3, 1, b"ab"),
        (PayloadKind.IMAGE, 0, 0, b""),
    ],
)
def test_payload_invariants(kind, width, height, body):
    with pytest.raises(InvalidPayload):
        Payload(kind, width, height, body)


@pytest.mark.parametrize(
    "data",
    [
        bytes([0x00, 0, 1, 0, 1, 0x41]),
        bytes([0x4D, 0, 1, 0, 2, 0x41, 0x42]),
        bytes([0x49, 0, 0, 0, 4]),
        bytes([0x4D, 0, 3, 0, 1, 0x41]),
        bytes([0x4D, 0]),
    ],
)
def test_unframe_rejects_bad_frames(data):
    with pytest.raises(BadHeader):
        unframe_payload(data)


def test_message_is_not_an_image():
    with pytest.raises(InvalidPayload):
        Payload.from_message(b"x").to_image()


def test_empty_message_is_legal():
    payload = Payload.from_message(b"")
    assert frame_payload(payload) == bytes([0x4D, 0, 0, 0, 1])
    assert np.frombuffer(payload.body, dtype=np.uint8).size == 0
