import os
import sys
from loguru import logger

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.config import settings


def setup_logging():
    """
    Set up logging configuration.

    Replaces the default loguru sink with a stderr sink at the configured
    level and adds a rotating file sink under the configured log directory.

    Returns:
        None
    """
    logger.remove()
    logger.add(sys.stderr, level=settings.log_level)

    logs_directory = settings.log_dir
    if not os.path.exists(logs_directory):
        os.makedirs(logs_directory)

    log_file_path = os.path.join(logs_directory, "tanglecolor.log")

    logger.add(
        log_file_path,
        rotation="100 MB",
        retention="30 days",
        level="INFO",
    )
