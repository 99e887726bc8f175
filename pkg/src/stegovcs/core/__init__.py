"""Pipeline orchestration."""

from stegovcs.core.pipeline import RoundTripResult, StegoVcsPipeline
from stegovcs.core.state import State

__all__ = ["RoundTripResult", "State", "StegoVcsPipeline"]
