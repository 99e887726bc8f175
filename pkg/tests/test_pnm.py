import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from stegovcs.errors import (
    InvalidImage,
    MalformedHeader,
    NotBinary,
    TruncatedData,
    UnsupportedMaxval,
)
from stegovcs.imaging.images import BinaryImage, GrayImage
from stegovcs.imaging.pnm import (
    PnmFormat,
    decode_pnm,
    encode_pnm,
    is_pnm,
    read_pnm,
    validate_binary,
    write_pnm,
)

shapes = st.tuples(st.integers(1, 17), st.integers(1, 17))


def test_plain_pgm():
    img = decode_pnm(b"P2\n2 1\n255\n0 255\n")
    assert img == GrayImage.from_sequence(2, 1, [0, 255])


def test_plain_pbm_ink_is_black():
    img = decode_pnm(b"P1\n2 1\n1 0\n")
    assert img.flat().tolist() == [0, 255]


def test_plain_pbm_digits_need_no_separator():
    assert decode_pnm(b"P1\n3 1\n101\n").flat().tolist() == [0, 255, 0]


def test_raw_pbm_polarity_and_padding():
    img = decode_pnm(b"P4\n10 1\n" + bytes([0b10000000, 0b01000000]))
    assert img.flat().tolist() == [0] + [255] * 8 + [0]


def test_truncated_plain_pgm():
    data = b"P2\n4 4\n255\n" + b" ".join(b"7" for _ in range(12))
    with pytest.raises(TruncatedData) as exc:
        decode_pnm(data)
    assert (exc.value.expected, exc.value.found) == (16, 12)


def test_truncated_raw_pgm():
    with pytest.raises(TruncatedData):
        decode_pnm(b"P5\n3 3\n255\n" + bytes(8))


def test_truncated_raw_pbm_counts_whole_rows():
    with pytest.raises(TruncatedData) as exc:
        decode_pnm(b"P4\n10 2\n" + bytes(3))
    assert (exc.value.expected, exc.value.found) == (20, 10)


def test_comments_are_skipped():
    img = decode_pnm(b"P2\n# made by hand\n2 1 # width height\n255\n0 # first\n255\n")
    assert img.flat().tolist() == [0, 255]


@pytest.mark.parametrize(
    "data",
    [
        b"P6\n1 1\n255\n\x00\x00\x00",
        b"XX",
        b"P5\n0 1\n255\n",
        b"P5\n1 1\n0\n\x00",
        b"P5\n1 x\n255\n",
        b"P2\n1 1\n255\n99999999999999999999999\n",
    ],
)
def test_malformed_headers(data):
    with pytest.raises(MalformedHeader):
        decode_pnm(data)


def test_maxval_above_255_rejected():
    with pytest.raises(UnsupportedMaxval):
        decode_pnm(b"P5\n1 1\n65535\n\x00\x00")


def test_small_maxval_is_rescaled():
    assert decode_pnm(b"P2\n3 1\n2\n0 1 2\n").flat().tolist() == [0, 128, 255]


def test_raw_pgm_layout():
    img = GrayImage.from_sequence(1, 1, [243])
    assert encode_pnm(img, PnmFormat.PGM_RAW) == b"P5\n1 1\n255\n" + bytes([243])


def test_pbm_requires_binary_pixels():
    with pytest.raises(NotBinary):
        encode_pnm(GrayImage.from_sequence(1, 1, [7]), "pbm")


@pytest.mark.parametrize("fmt", ["pgm-raw", "pgm-ascii"])
@given(pixels=arrays(np.uint8, shapes))
def test_gray_codec_round_trip(fmt, pixels):
    img = GrayImage(pixels)
    assert decode_pnm(encode_pnm(img, fmt)) == img


@pytest.mark.parametrize("fmt", ["pbm", "pbm-ascii"])
@given(pixels=arrays(np.uint8, shapes, elements=st.sampled_from([0, 255])))
def test_binary_codec_round_trip(fmt, pixels):
    img = BinaryImage(pixels)
    assert decode_pnm(encode_pnm(img, fmt)) == img


def test_random_64x64_gray_round_trip(rng):
    img = GrayImage(rng.integers(0, 256, size=(64, 64)))
    assert decode_pnm(encode_pnm(img, "pgm-raw")) == img


def test_validate_binary():
    assert isinstance(validate_binary(GrayImage.from_sequence(4, 1, [0, 255, 255, 0])), BinaryImage)
    with pytest.raises(NotBinary) as exc:
        validate_binary(GrayImage.from_sequence(2, 1, [0, 254]))
    assert (exc.value.index, exc.value.value) == (1, 254)


def test_empty_image_rejected():
    with pytest.raises(InvalidImage):
        GrayImage(np.zeros((0, 0), dtype=np.uint8))


def test_file_helpers(tmp_path):
    img = GrayImage.from_sequence(3, 2, [0, 1, 2, 250, 251, 252])
    path = tmp_path / "img.pgm"
    write_pnm(path, img, "pgm-raw")
    assert read_pnm(path) == img


def test_magic_sniffing():
    assert is_pnm(b"P5\n1 1\n255\n\x00")
    assert is_pnm(b"P1 1 1 0")
    assert not is_pnm(b"Plain text message")
    assert not is_pnm(b"P3\n1 1\n255\n0 0 0")
