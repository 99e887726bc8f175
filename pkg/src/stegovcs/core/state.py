"""Pipeline state passed between graph stages."""

from typing import List, Optional, TypedDict

from stegovcs.imaging.images import BinaryImage, Share, StegoImage
from stegovcs.scheme.payload import Payload


class State(TypedDict, total=False):
    """State for the sender/receiver workflow."""

    # Sender inputs
    cover: Optional[BinaryImage]
    payload: Optional[Payload]
    seed: int
    workers: int

    # Sender outputs
    stego: Optional[StegoImage]
    share1: Optional[Share]
    share2: Optional[Share]

    # Receiver outputs
    decoded: Optional[StegoImage]
    extracted_payload: Optional[Payload]
    restored_cover: Optional[BinaryImage]

    # Verification
    verified: Optional[bool]
    failures: List[str]

    # Workflow control
    stage: str  # "embed" (full round trip) or "decode" (receiver only)
