"""Shared fixtures for the stegovcs test suite."""

import numpy as np
import pytest

from stegovcs.imaging.images import BinaryImage, StegoImage
from stegovcs.scheme.payload import Payload

BAND_VALUES = np.concatenate([np.arange(0, 13), np.arange(243, 256)]).astype(np.uint8)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def make_cover(rng):
    def _make(height, width):
        return BinaryImage(rng.choice(np.array([0, 255], dtype=np.uint8), size=(height, width)))

    return _make


@pytest.fixture
def make_stego(rng):
    def _make(height, width):
        return StegoImage(rng.choice(BAND_VALUES, size=(height, width)))

    return _make


@pytest.fixture
def make_message(rng):
    def _make(length):
        return Payload.from_message(rng.integers(0, 256, size=length, dtype=np.uint8).tobytes())

    return _make
