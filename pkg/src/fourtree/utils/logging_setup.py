import logging
from typing import Optional

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: Optional[str] = None) -> logging.Logger:
    """
    Attach a single stream handler to the package logger.

    Args:
        level: Level name; defaults to Config.log_level

    Returns:
        logging.Logger: The `fourtree` logger
    """
    if level is None:
        from .config import get_config
        level = get_config().log_level

    logger = logging.getLogger("fourtree")
    logger.setLevel(level.upper())
    if not any(getattr(h, "_fourtree", False) for h in logger.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._fourtree = True
        logger.addHandler(handler)
    return logger
