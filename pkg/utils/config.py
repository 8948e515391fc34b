from pydantic_settings import BaseSettings
from typing import Optional


class Settings(BaseSettings):
    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FILE: Optional[str] = None

    # Engines
    DEFAULT_MAX_STEPS: int = 24
    DEFAULT_GENERATIONS: int = 8
    MAX_ENUMERATED_CIRCLES: int = 200000

    # Rendering
    RENDER_WIDTH_PX: int = 800
    RENDER_SIGNIFICANT_DIGITS: int = 12
    TRACE_FILL: str = "#c0c0c0"

    # Decimal snapping under --unsafe-approx: denominators up to 10**APPROX_DIGITS
    APPROX_DIGITS: int = 6

    class Config:
        env_prefix = "HALFPLANE_"
        env_file = ".env"
        extra = "ignore"


settings = Settings()
