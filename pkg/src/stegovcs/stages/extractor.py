import logging

from stegovcs.core.state import State
from stegovcs.scheme.extract import extract_payload, restore_cover
from stegovcs.stages.base import BaseStage

logger = logging.getLogger(__name__)


class ExtractStage(BaseStage):
    """Recovers the payload and the pristine cover from the decoded image."""

    def process(self, state: State) -> State:
        decoded = state["decoded"]
        state["extracted_payload"] = extract_payload(decoded)
        state["restored_cover"] = restore_cover(decoded)
        logger.info("✅ extracted %r", state["extracted_payload"])
        return state
