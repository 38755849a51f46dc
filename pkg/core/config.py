import os

from pydantic_settings import BaseSettings

_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


class Settings(BaseSettings):
    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "console"  # console | json

    # Parallelism hint, never changes results
    THREADS: int = 1

    # Residue engine
    RESIDUE_WINDOW_MARGIN: int = 2
    RESIDUE_STABILITY_CHECK: bool = False

    # Thom series
    DEFAULT_SCAN_RADIUS: int = 5
    TABLE1_PATH: str = os.path.join(_ROOT, "data", "table1.json")

    class Config:
        env_file = ".env"


settings = Settings()
