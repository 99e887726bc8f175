"""stegovcs - secret message/image transmission through (2,2) visual cryptography shares."""

__version__ = "0.1.0"

from stegovcs.core.pipeline import RoundTripResult, StegoVcsPipeline

__all__ = ["RoundTripResult", "StegoVcsPipeline"]
