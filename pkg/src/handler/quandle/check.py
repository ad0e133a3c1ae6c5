import os
import sys

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../../..")))

from src.structure import Command
from src.data.processer.interface import Interface as DataProcesser
from src.algebra.quandle import inner_group, is_connected, is_faithful
from src.handler.utils.utils import error_command


async def handle_check(command: Command, data_processer: DataProcesser) -> Command:
    """
    Validate every quandle record of a file.

    Args:
        command (Command): Carries params["file"].
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: One "OK ..." line per quandle.
    """
    records = await data_processer.load_records(command.params["file"])
    if not records.quandles:
        return error_command(command, f"{command.params['file']}: no quandle records")

    for quandle in records.quandles:
        line = " ".join(
            [
                "OK",
                "connected" if is_connected(quandle) else "disconnected",
                "faithful" if is_faithful(quandle) else "non-faithful",
                f"|Inn|={inner_group(quandle).perm_group.order}",
            ]
        )
        if len(records.quandles) > 1:
            line = f"{quandle.name}: {line}"
        command.output.append(line)
    return command
