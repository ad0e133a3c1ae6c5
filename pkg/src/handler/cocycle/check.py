import os
import sys

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../../..")))

from src.structure import Command
from src.data.processer.interface import Interface as DataProcesser
from src.algebra.group import is_abelian
from src.handler.utils.utils import error_command


async def handle_check(command: Command, data_processer: DataProcesser) -> Command:
    """
    Validate every cocycle record of a file against its base and group.

    Args:
        command (Command): Carries params["file"].
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: One "OK ..." line per cocycle.
    """
    records = await data_processer.load_records(command.params["file"])
    if not records.cocycles:
        return error_command(command, f"{command.params['file']}: no cocycle records")

    for cocycle in records.cocycles:
        kind = "abelian" if is_abelian(cocycle.coefficient) else "non-abelian"
        command.output.append(
            f"OK {cocycle.name} |X|={cocycle.base.order} "
            f"|Λ|={cocycle.coefficient.order} {kind}"
        )
    return command
