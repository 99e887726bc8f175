"""Graph construction for the embed-share-decode-extract workflow."""

import logging

from langgraph.graph import END, START, StateGraph

from stegovcs.core.state import State

logger = logging.getLogger(__name__)


def route_entry(state: State) -> str:
    """Senders start at embedding, receivers at share fusion."""
    stage = state.get("stage", "embed")
    if stage == "embed":
        return "embed"
    if stage == "decode":
        return "decode"
    raise ValueError(f"unknown pipeline stage {stage!r}")


def create_pipeline_graph(workers: int = 1):
    """Compile the pipeline graph; stages share the given worker count."""
    # stages import core.state, so they are loaded here rather than at module level
    from stegovcs.stages.embedder import EmbedStage
    from stegovcs.stages.extractor import ExtractStage
    from stegovcs.stages.share_decoder import DecodeStage
    from stegovcs.stages.share_generator import ShareStage
    from stegovcs.stages.verifier import VerifyStage

    workflow = StateGraph(State)

    workflow.add_node("embed", EmbedStage(workers).process)
    workflow.add_node("shares", ShareStage(workers).process)
    workflow.add_node("decode", DecodeStage(workers).process)
    workflow.add_node("extract", ExtractStage(workers).process)
    workflow.add_node("verify", VerifyStage(workers).process)

    workflow.add_conditional_edges(START, route_entry, {"embed": "embed", "decode": "decode"})
    workflow.add_edge("embed", "shares")
    workflow.add_edge("shares", "decode")
    workflow.add_edge("decode", "extract")
    workflow.add_edge("extract", "verify")
    workflow.add_edge("verify", END)

    logger.debug("pipeline graph compiled")
    return workflow.compile()
