import logging

from stegovcs.core.state import State
from stegovcs.stages.base import BaseStage

logger = logging.getLogger(__name__)


class VerifyStage(BaseStage):
    """Compares receiver outputs with the sender inputs that are known."""

    def process(self, state: State) -> State:
        failures = []
        checks = (
            ("stego", "decoded", "decoded image differs from the embedded image"),
            ("payload", "extracted_payload", "extracted payload differs from the secret"),
            ("cover", "restored_cover", "restored cover differs from the original cover"),
        )
        compared = 0
        for expected_key, actual_key, message in checks:
            expected = state.get(expected_key)
            if expected is None:
                continue
            compared += 1
            if state.get(actual_key) != expected:
                failures.append(message)

        state["failures"] = failures
        state["verified"] = not failures if compared else None
        if failures:
            logger.warning("❌ round trip failed: %s", "; ".join(failures))
        elif compared:
            logger.info("✅ round trip verified (%d checks)", compared)
        return state
