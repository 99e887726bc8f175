"""JSON manifest recording how a pair of shares was produced."""

import hashlib
import json
import logging
from pathlib import Path
from typing import Union

from pydantic import BaseModel, Field

from stegovcs.errors import ManifestMismatch

logger = logging.getLogger(__name__)

MANIFEST_VERSION = 1


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


class ShareManifest(BaseModel):
    """Reproducibility record for one ``shares`` run. Holds no timestamps."""

    version: int = Field(default=MANIFEST_VERSION)
    seed: int = Field(description="seed the share patterns were drawn with")
    width: int = Field(description="stego image width (shares are twice as wide)")
    height: int
    stego_sha256: str
    share1_sha256: str
    share2_sha256: str


def save_manifest(path: Union[str, Path], manifest: ShareManifest) -> Path:
    path = Path(path)
    with open(path, "w") as f:
        json.dump(manifest.model_dump(), f, indent=2)
        f.write("\n")
    logger.info("✅ manifest saved to %s", path)
    return path


def load_manifest(path: Union[str, Path]) -> ShareManifest:
    with open(path, "r") as f:
        return ShareManifest.model_validate(json.load(f))


def verify_shares(manifest: ShareManifest, share1: bytes, share2: bytes) -> None:
    """Check share file digests against the manifest; either order is accepted."""
    recorded = (manifest.share1_sha256, manifest.share2_sha256)
    digests = (sha256_hex(share1), sha256_hex(share2))
    if digests == recorded or digests[::-1] == recorded:
        return
    for name, digest in zip(("share1", "share2"), digests):
        if digest not in recorded:
            raise ManifestMismatch(f"{name} digest {digest[:12]} is not recorded in the manifest")
    raise ManifestMismatch("both files hold the same share")
