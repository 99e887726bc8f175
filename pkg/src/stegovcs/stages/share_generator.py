import logging

from stegovcs.core.state import State
from stegovcs.scheme.shares import generate_shares
from stegovcs.stages.base import BaseStage

logger = logging.getLogger(__name__)


class ShareStage(BaseStage):
    """Splits the stego image into two shares."""

    def process(self, state: State) -> State:
        workers = state.get("workers") or self.workers
        state["share1"], state["share2"] = generate_shares(state["stego"], state["seed"], workers)
        logger.info("✅ shares generated (seed=%d, workers=%d)", state["seed"], workers)
        return state
