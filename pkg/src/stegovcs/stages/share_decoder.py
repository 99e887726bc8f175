import logging

from stegovcs.core.state import State
from stegovcs.scheme.decode import decode_shares
from stegovcs.stages.base import BaseStage

logger = logging.getLogger(__name__)


class DecodeStage(BaseStage):
    """Fuses the two shares back into the stego image."""

    def process(self, state: State) -> State:
        state["decoded"] = decode_shares(state["share1"], state["share2"])
        logger.info("✅ shares fused into %r", state["decoded"])
        return state
