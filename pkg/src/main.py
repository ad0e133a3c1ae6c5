import os
import sys
from loguru import logger

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src import register
from src.storage import lookup_handler
from src.structure import Command, TangleColorError
from src.data.processer.interface import Interface as DataProcesser
from src.handler.utils.utils import error_command


async def handle_command(command: Command, data_processer: DataProcesser) -> Command:
    """
    Handle a command.

    Args:
        command (Command): The command to be handled.
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: The command, invalid with an error line on failure.
    """
    command.valid = True
    command.error = ""

    handler = lookup_handler(command.name)
    if handler is None:
        return error_command(command, f"unknown command {command.name}")

    if "workers" in command.params and command.params["workers"] < 1:
        return error_command(command, "workers must be at least 1")

    logger.info(f"handle command: {command.name}, {command.params}")
    try:
        command = await handler(command, data_processer)
    except TangleColorError as e:
        message = e.message if e.kind in ("ParseError", "FileError") else str(e)
        return error_command(command, message)

    return command
