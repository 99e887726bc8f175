import logging

from stegovcs.core.state import State
from stegovcs.scheme.embed import embed
from stegovcs.stages.base import BaseStage

logger = logging.getLogger(__name__)


class EmbedStage(BaseStage):
    """Hides the payload in the cover."""

    def process(self, state: State) -> State:
        cover, payload = state["cover"], state["payload"]
        state["stego"] = embed(cover, payload)
        logger.info("✅ embedded %r into %dx%d cover", payload, cover.width, cover.height)
        return state
