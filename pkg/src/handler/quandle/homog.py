import os
import sys

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../../..")))

from src.structure import Command
from src.data.processer.interface import Interface as DataProcesser
from src.data.processer.textfile import format_quandle
from src.algebra.galex import homogeneous_quandle
from src.handler.utils.utils import load_group_and_automorphism, resolve_subgroup


async def handle_homog(command: Command, data_processer: DataProcesser) -> Command:
    """
    Build the homogeneous quandle H(G,H,f) on right cosets.

    Args:
        command (Command): Carries params["group"], params["auto"] and
            params["subgroup"] ("fix" or generator labels).
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: The quandle record lines.
    """
    params = command.params
    group, f = await load_group_and_automorphism(params, data_processer)
    subgroup = resolve_subgroup(group, f, params.get("subgroup"))
    quandle, _ = homogeneous_quandle(
        group, subgroup, f, name=params.get("name") or f"H_{group.name}_{subgroup.order}"
    )
    lines = format_quandle(
        quandle, [f"cosets of a subgroup of order {subgroup.order} in {group.name}"]
    )
    await data_processer.save_lines(params.get("out"), lines)
    if params.get("out") is None:
        command.output.extend(lines)
    return command
