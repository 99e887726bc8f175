"""Storage module for share manifests."""

from .manifest import ShareManifest, load_manifest, save_manifest, verify_shares

__all__ = ["ShareManifest", "load_manifest", "save_manifest", "verify_shares"]
