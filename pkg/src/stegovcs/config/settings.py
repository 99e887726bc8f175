"""Configuration settings for the stegovcs toolkit."""

import os
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables
env_path = Path(__file__).parent.parent.parent.parent / ".env"
load_dotenv(env_path)


class Settings:
    """Application settings."""

    # Application Settings
    APP_NAME: str = "stegovcs"
    APP_VERSION: str = "0.1.0"

    # Logging
    LOG_LEVEL: str = os.getenv("STEGOVCS_LOG_LEVEL", "WARNING")

    # Share generation thread count; output never depends on it
    WORKERS: int = int(os.getenv("STEGOVCS_WORKERS", "1"))

    # Output containers
    GRAY_FORMAT: str = os.getenv("STEGOVCS_GRAY_FORMAT", "pgm-raw")
    COVER_FORMAT: str = os.getenv("STEGOVCS_COVER_FORMAT", "pbm")


settings = Settings()
