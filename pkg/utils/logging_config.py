import logging
import sys
from pathlib import Path
from typing import Optional

FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(level: str = "WARNING", log_file: Optional[str] = None) -> None:
    """Setup logging configuration; stdout stays free for command output"""

    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(path))

    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format=FORMAT,
        handlers=handlers,
        force=True,
    )

    # sympy's factorization is chatty at DEBUG
    logging.getLogger("sympy").setLevel(logging.WARNING)
