"""Base stage functionality."""

from abc import ABC, abstractmethod

from stegovcs.core.state import State


class BaseStage(ABC):
    """Base class for all pipeline stages."""

    def __init__(self, workers: int = 1):
        """Initialize the stage with a worker count for parallel steps."""
        self.workers = workers

    @abstractmethod
    def process(self, state: State) -> State:
        """Process the state and return updated state."""
