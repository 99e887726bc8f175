import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from stegovcs.bands import first_out_of_band
from stegovcs.errors import CapacityExceeded, NotBinary
from stegovcs.imaging.images import BinaryImage, GrayImage, StegoImage
from stegovcs.scheme.embed import capacity, embed, embed_bit_pair
from stegovcs.scheme.payload import Payload
from stegovcs.scheme.position_hash import PositionPair, position_grid


@pytest.mark.parametrize(
    "cover_pixel, bits, pos, expected",
    [
        (255, (1, 0), (0, 1), 253),
        (0, (1, 1), (3, 0), 9),
        (0, (0, 0), (2, 3), 0),
        (255, (1, 1), (1, 2), 255),
    ],
)
def test_bit_pair_examples(cover_pixel, bits, pos, expected):
    assert embed_bit_pair(cover_pixel, bits, PositionPair(*pos)) == expected


@given(
    cover_pixel=st.sampled_from([0, 255]),
    b1=st.integers(0, 1),
    b2=st.integers(0, 1),
    first=st.integers(0, 3),
)
def test_bit_pair_stays_in_its_band(cover_pixel, b1, b2, first):
    value = embed_bit_pair(cover_pixel, (b1, b2), PositionPair(first, (first + 1) % 4))
    if cover_pixel == 0:
        assert 0 <= value <= 12
    else:
        assert 243 <= value <= 255


def test_secret_image_fits_large_cover(make_cover, rng):
    cover = make_cover(64, 64)
    secret = GrayImage(rng.integers(0, 256, size=(16, 16)))
    stego = embed(cover, Payload.from_image(secret))
    assert isinstance(stego, StegoImage)
    assert first_out_of_band(stego.pixels) is None


def test_secret_image_overflows_small_cover(make_cover, rng):
    secret = GrayImage(rng.integers(0, 256, size=(16, 16)))
    with pytest.raises(CapacityExceeded) as exc:
        embed(make_cover(32, 32), Payload.from_image(secret))
    assert exc.value.needed == 4 * (5 + 256)
    assert exc.value.available == 1024


def test_capacity_boundary(make_cover, make_message):
    cover = make_cover(20, 24)
    assert capacity(24, 20) == 115
    embed(cover, make_message(115))
    with pytest.raises(CapacityExceeded):
        embed(cover, make_message(116))


def test_capacity_of_tiny_cover():
    assert capacity(4, 4) == 0


def test_zero_payload_on_black_cover():
    cover = BinaryImage(np.zeros((16, 16), dtype=np.uint8))
    stego = embed(cover, Payload.from_message(bytes(10)))
    assert stego.pixels.max() <= 12
    assert not stego.flat()[4 * 15 :].any()


def test_only_hashed_positions_change(make_cover, make_message):
    cover = make_cover(24, 31)
    stego = embed(cover, make_message(100))
    first, second = position_grid(24, 31)
    allowed = (1 << first.astype(np.int64)) | (1 << second.astype(np.int64))
    changed = (cover.flat() ^ stego.flat()).astype(np.int64)
    assert not (changed & ~allowed).any()


def test_pixels_past_the_frame_are_untouched(make_cover, make_message):
    cover = make_cover(16, 16)
    stego = embed(cover, make_message(7))
    assert np.array_equal(stego.flat()[48:], cover.flat()[48:])


def test_rejects_non_binary_cover():
    cover = GrayImage.from_sequence(5, 5, [0] * 12 + [7] + [255] * 12)
    with pytest.raises(NotBinary) as exc:
        embed(cover, Payload.from_message(b""))
    assert exc.value.index == 12
