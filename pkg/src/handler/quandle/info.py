import os
import sys

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../../..")))

from src.structure import Command
from src.data.processer.interface import Interface as DataProcesser
from src.data.utils.field import format_labels
from src.algebra.perm_group import derived_subgroup
from src.algebra.quandle import (
    end_permutation_p,
    fiber_sizes,
    inner_group,
    is_connected,
    is_faithful,
)
from src.algebra.galex import classify_extension, galex
from src.handler.utils.utils import load_group_and_automorphism, load_quandle


async def handle_info(command: Command, data_processer: DataProcesser) -> Command:
    """
    Print the structural data of one quandle.

    The quandle is read from params["quandle"], or built as GAlex(G,f) from
    params["group"]; in the latter case the extension class is printed too.

    Args:
        command (Command): The command.
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: The command with its report lines.
    """
    params = command.params
    if params.get("group"):
        group, f = await load_group_and_automorphism(params, data_processer)
        quandle = galex(group, f, name=f"GAlex({group.name},{f.name})")
    else:
        quandle = await load_quandle(params, data_processer)
        group = f = None

    connected = is_connected(quandle)
    inner = inner_group(quandle).perm_group
    lines = [
        f"quandle {quandle.name}",
        f"order {quandle.order}",
        f"connected {'yes' if connected else 'no'}",
        f"faithful {'yes' if is_faithful(quandle) else 'no'}",
        f"|Inn| {inner.order}",
        f"|Inn'| {derived_subgroup(inner).order}",
        f"fiber sizes {','.join(str(s) for s in fiber_sizes(quandle))}",
    ]
    if connected:
        p = end_permutation_p(quandle, 0)
        lines.append(f"p {format_labels(p)}")
    if group is not None and connected:
        lines.append(f"extension {classify_extension(group, f, quandle)}")

    command.output.extend(lines)
    return command
