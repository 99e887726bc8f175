"""Exception hierarchy for the stegovcs toolkit.

Domain errors map to CLI exit code 1, container (PNM) errors to exit code 2.
"""

from typing import Optional


class StegoVcsError(ValueError):
    """Base class for every error raised by the toolkit."""

    exit_code: int = 1


class DomainError(StegoVcsError):
    """A scheme-level failure: the inputs are well-formed but violate the scheme."""

    exit_code = 1


class PnmError(StegoVcsError):
    """An image container could not be read or written."""

    exit_code = 2


class _IndexedError(DomainError):
    """Domain error that points at a pixel or byte."""

    def __init__(self, message: str, index: Optional[int] = None, value: Optional[int] = None):
        self.index = index
        self.value = value
        if index is not None:
            detail = f"index {index}" if value is None else f"index {index}, value {value}"
            message = f"{message} ({detail})"
        super().__init__(message)


class NotBinary(_IndexedError):
    """Cover pixel outside {0, 255}."""


class OutOfBand(_IndexedError):
    """Stego pixel in the band gap [13, 242] handed to share generation."""


class BandViolation(_IndexedError):
    """Stego pixel in the band gap found while extracting or restoring."""


class InconsistentPair(_IndexedError):
    """Share pixel pairs match neither the white nor the black form."""


class CapacityExceeded(DomainError):
    def __init__(self, needed: int, available: int):
        self.needed = needed
        self.available = available
        super().__init__(f"payload needs {needed} cover pixels but only {available} are available")


class PayloadTooLarge(DomainError):
    """A payload dimension does not fit the 16-bit frame header field."""


class InvalidPayload(DomainError):
    """Payload fields contradict each other."""


class BadHeader(DomainError):
    """Frame header could not be parsed."""


class BodyOverrun(DomainError):
    def __init__(self, needed: int, available: int):
        self.needed = needed
        self.available = available
        super().__init__(
            f"frame declares a body needing {needed} pixels but the image has {available}"
        )


class DimensionMismatch(DomainError):
    """Two images that must line up do not."""


class ManifestMismatch(DomainError):
    """Share files do not match the digests recorded for them."""


class MalformedHeader(PnmError):
    """Bad magic, dimensions or maxval token."""


class TruncatedData(PnmError):
    def __init__(self, expected: int, found: int):
        self.expected = expected
        self.found = found
        super().__init__(f"expected {expected} samples, found {found}")


class UnsupportedMaxval(PnmError):
    def __init__(self, maxval: int):
        self.maxval = maxval
        super().__init__(f"maxval {maxval} exceeds 255")


class InvalidImage(PnmError):
    """Pixel array violates the GrayImage invariants."""
