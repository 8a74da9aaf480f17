import logging
import os
from dotenv import load_dotenv
from pathlib import Path

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("json", "tsv")


def _int_env(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    try:
        return int(value)
    except ValueError:
        logger.warning("%s=%r is not an integer, using %d", name, value, default)
        return default


def _bool_env(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


class Config:
    """Defaults for the command line and the dashboard"""

    def __init__(self):
        # Output and reproducibility
        self.OUTPUT_FORMAT = os.getenv('AFFINE_OUTPUT_FORMAT', 'json').lower()
        self.SEED = _int_env('AFFINE_SEED', 0)

        # Workload bounds
        self.DEGREE = _int_env('AFFINE_DEGREE', 30)
        self.MAX_EXPONENT = _int_env('AFFINE_MAX_EXPONENT', 10)
        self.MAX_LENGTH = _int_env('AFFINE_MAX_LENGTH', 8)

        # Logging and progress
        self.LOG_LEVEL = os.getenv('AFFINE_LOG_LEVEL', 'WARNING').upper()
        self.SHOW_PROGRESS = _bool_env('AFFINE_SHOW_PROGRESS', False)

        # Paths
        self.PROJECT_ROOT = Path(__file__).parent.parent
        generated = os.getenv('AFFINE_GENERATED_DIR')
        self.GENERATED_DIR = Path(generated) if generated else self.PROJECT_ROOT / "generated"
        self.REPORTS_DIR = self.GENERATED_DIR / "reports"
        self.WINDOWS_DIR = self.GENERATED_DIR / "windows"

    def ensure_directories(self):
        """Create the output directories if they don't exist"""
        self.REPORTS_DIR.mkdir(parents=True, exist_ok=True)
        self.WINDOWS_DIR.mkdir(parents=True, exist_ok=True)

    def validate(self) -> bool:
        """Check the settings; problems are logged, not raised"""
        problems = []

        if self.OUTPUT_FORMAT not in OUTPUT_FORMATS:
            problems.append(f"AFFINE_OUTPUT_FORMAT must be one of {', '.join(OUTPUT_FORMATS)}")
        for name in ("DEGREE", "MAX_EXPONENT", "MAX_LENGTH"):
            if getattr(self, name) < 0:
                problems.append(f"AFFINE_{name} must be nonnegative")
        if not isinstance(logging.getLevelName(self.LOG_LEVEL), int):
            problems.append(f"AFFINE_LOG_LEVEL {self.LOG_LEVEL!r} is not a logging level")

        for problem in problems:
            logger.warning("Invalid setting: %s", problem)

        return len(problems) == 0
