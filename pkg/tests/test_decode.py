import numpy as np
import pytest

from stegovcs.errors import DimensionMismatch, InconsistentPair
from stegovcs.imaging.images import GrayImage, Share
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
from stegovcs.scheme.extract import restore_cover
from stegovcs.scheme.shares import PatternChoice, generate_shares, split_pixel

BAND = list(range(0, 13)) + list(range(243, 256))


@pytest.mark.parametrize(
    "pair1, pair2, expected",
    [
        ((248, 0), (249, 0), 243),
        ((250, 0), (250, 0), 244),
        ((0, 254), (0, 255), 255),
        ((6, 255), (255, 6), 12),
        ((0, 255), (255, 0), 0),
        ((255, 0), (1, 255), 1),
    ],
)
def test_fusion_examples(pair1, pair2, expected):
    assert fuse_pair(pair1, pair2) == expected


@pytest.mark.parametrize("pattern", list(PatternChoice))
@pytest.mark.parametrize("x", BAND)
def test_every_band_value_fuses_back(x, pattern):
    pair1, pair2 = split_pixel(x, pattern)
    assert fuse_pair(pair1, pair2) == x
    assert fuse_pair(pair2, pair1) == x
    assert fuse_pair_logical(pair1, pair2) == x
    expected_class = PixelClass.WHITE if x >= 243 else PixelClass.BLACK
    assert classify_pair(pair1, pair2) is expected_class


@pytest.mark.parametrize(
    "pair1, pair2", [((0, 0), (0, 0)), ((248, 0), (248, 0)), ((9, 255), (255, 9))]
)
def test_impossible_pairs_rejected(pair1, pair2):
    with pytest.raises(InconsistentPair):
        fuse_pair(pair1, pair2)


@pytest.mark.parametrize("seed", [0, 1, 0xDEADBEEF])
def test_decode_inverts_sharing(make_stego, seed):
    stego = make_stego(64, 64)
    share1, share2 = generate_shares(stego, seed)
    assert decode_shares(share1, share2) == stego
    assert decode_shares(share2, share1) == stego


def test_mismatched_shares():
    with pytest.raises(DimensionMismatch):
        decode_shares(Share(np.zeros((2, 4), np.uint8)), Share(np.zeros((3, 4), np.uint8)))
    with pytest.raises(DimensionMismatch):
        decode_shares(GrayImage(np.zeros((2, 3), np.uint8)), GrayImage(np.zeros((2, 3), np.uint8)))


def test_every_black_pair_corruption_is_caught(make_stego):
    stego = make_stego(8, 8)
    shares = generate_shares(stego, 77)
    corrupt_values = [v for v in range(256) if v > 6 and v != 255]
    black = [p for p, x in enumerate(stego.flat().tolist()) if x <= 12]
    assert black

    for target in (0, 1):
        base = shares[target].pixels.copy()
        other = shares[1 - target]
        for p in black:
            for half in (0, 1):
                column = 2 * p + half
                for v in corrupt_values:
                    mutated = base.copy().reshape(-1)
                    mutated[column] = v
                    corrupted = Share(mutated.reshape(base.shape))
                    pair = (corrupted, other) if target == 0 else (other, corrupted)
                    with pytest.raises(InconsistentPair) as exc:
                        decode_shares(*pair)
                    assert exc.value.index == p


def test_stacking_example():
    share1 = Share(np.array([[248, 0]]))
    share2 = Share(np.array([[249, 0]]))
    assert stack_or(share1, share2).flat().tolist() == [249, 0]


def test_stacked_black_pairs_are_full(make_stego):
    stego = make_stego(20, 20)
    overlay = stack_or(*generate_shares(stego, 5))
    weights = overlay_weights(overlay)
    assert np.array_equal(weights == 2, stego.pixels <= 12)
    assert np.all(weights[stego.pixels >= 243] == 1)
    assert visual_decode(overlay) == restore_cover(stego)
