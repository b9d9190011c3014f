import logging
import os

from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler

load_dotenv()

# Observed-association intervals (Wald, log scale)
CONFIDENCE_LEVEL = float(os.getenv("DME_CONFIDENCE_LEVEL", "0.95"))

# Verification harness
RELATIVE_TOLERANCE = float(os.getenv("DME_RELATIVE_TOLERANCE", "1e-12"))
GRID_POINTS_PER_AXIS = int(os.getenv("DME_GRID_POINTS_PER_AXIS", "7"))
GRID_LOWER = float(os.getenv("DME_GRID_LOWER", "0.05"))
GRID_UPPER = float(os.getenv("DME_GRID_UPPER", "0.95"))
GRID_RANDOM_DRAWS = int(os.getenv("DME_GRID_RANDOM_DRAWS", "100000"))
GRID_SEED = int(os.getenv("DME_GRID_SEED", "42"))
GRID_CELL_CAP = int(os.getenv("DME_GRID_CELL_CAP", "1000000"))

# Reporting
DISPLAY_DECIMALS = int(os.getenv("DME_DISPLAY_DECIMALS", "2"))
LOG_LEVEL = os.getenv("DME_LOG_LEVEL", "WARNING")
SCENARIOS_DIR = os.getenv("DME_SCENARIOS_DIR", "data/scenarios")

_handler = None


def get_logger(name: str) -> logging.Logger:
    """Logger writing through a shared stderr RichHandler."""
    global _handler
    if _handler is None:
        _handler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            rich_tracebacks=False,
        )
        root = logging.getLogger("src")
        root.addHandler(_handler)
        root.setLevel(LOG_LEVEL.upper())
        root.propagate = False
    return logging.getLogger(name)
