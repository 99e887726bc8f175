import pytest

from stegovcs.errors import ManifestMismatch
from stegovcs.storage.manifest import (
    MANIFEST_VERSION,
    ShareManifest,
    load_manifest,
    save_manifest,
    sha256_hex,
    verify_shares,
)


@pytest.fixture
def manifest():
    return ShareManifest(
        seed=42,
        width=3,
        height=2,
        stego_sha256=sha256_hex(b"stego"),
        share1_sha256=sha256_hex(b"one"),
        share2_sha256=sha256_hex(b"two"),
    )


def test_save_and_load(tmp_path, manifest):
    path = save_manifest(tmp_path / "shares.json", manifest)
    loaded = load_manifest(path)
    assert loaded == manifest
    assert loaded.version == MANIFEST_VERSION
    assert path.read_text().endswith("}\n")


def test_saved_manifest_is_byte_stable(tmp_path, manifest):
    first = save_manifest(tmp_path / "a.json", manifest).read_bytes()
    second = save_manifest(tmp_path / "b.json", manifest).read_bytes()
    assert first == second


def test_either_share_order_verifies(manifest):
    verify_shares(manifest, b"one", b"two")
    verify_shares(manifest, b"two", b"one")


def test_foreign_share_rejected(manifest):
    with pytest.raises(ManifestMismatch, match="share2"):
        verify_shares(manifest, b"one", b"three")


def test_duplicate_share_rejected(manifest):
    with pytest.raises(ManifestMismatch, match="same share"):
        verify_shares(manifest, b"one", b"one")
