"""Sender/receiver pipeline driven by the compiled stage graph."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from stegovcs.config.settings import settings
from stegovcs.core.graph import create_pipeline_graph
from stegovcs.core.state import State
from stegovcs.imaging.images import BinaryImage, GrayImage, Share, StegoImage
from stegovcs.imaging.pnm import validate_binary
from stegovcs.scheme.payload import Payload

logger = logging.getLogger(__name__)


@dataclass
class RoundTripResult:
    verified: bool
    failures: List[str] = field(default_factory=list)
    stego: Optional[StegoImage] = None
    share1: Optional[Share] = None
    share2: Optional[Share] = None
    decoded: Optional[StegoImage] = None
    extracted_payload: Optional[Payload] = None
    restored_cover: Optional[BinaryImage] = None


class StegoVcsPipeline:
    """Runs the whole scheme, or just its receiving half, through the graph."""

    def __init__(self, workers: Optional[int] = None):
        self.workers = workers or settings.WORKERS
        self.graph = create_pipeline_graph(self.workers)

    def run_roundtrip(self, cover: GrayImage, payload: Payload, seed: int) -> RoundTripResult:
        """Embed, share, fuse and extract, then check both outputs against the inputs."""
        initial = State(
            cover=validate_binary(cover),
            payload=payload,
            seed=seed,
            workers=self.workers,
            failures=[],
            stage="embed",
        )
        final = self.graph.invoke(initial)
        result = RoundTripResult(
            verified=bool(final.get("verified")),
            failures=list(final.get("failures", [])),
            stego=final.get("stego"),
            share1=final.get("share1"),
            share2=final.get("share2"),
            decoded=final.get("decoded"),
            extracted_payload=final.get("extracted_payload"),
            restored_cover=final.get("restored_cover"),
        )
        logger.info("round trip %s", "PASS" if result.verified else "FAIL")
        return result

    def recover(self, share1: GrayImage, share2: GrayImage) -> Tuple[Payload, BinaryImage]:
        """Receiver side only: fuse the shares, return (payload, restored cover)."""
        final = self.graph.invoke(
            State(share1=share1, share2=share2, failures=[], stage="decode")
        )
        return final["extracted_payload"], final["restored_cover"]
