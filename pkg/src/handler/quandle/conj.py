import os
import sys

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../../..")))

from src.structure import Command
from src.data.processer.interface import Interface as DataProcesser
from src.data.processer.textfile import format_quandle
from src.data.utils.field import format_labels, parse_permutation
from src.algebra.quandle import conj_quandle
from src.handler.utils.utils import error_command


async def handle_conj(command: Command, data_processer: DataProcesser) -> Command:
    """
    Build the conjugation quandle on the class of an element.

    The header comment records which permutation every label stands for.

    Args:
        command (Command): Carries params["permgroup"] and params["element"].
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: The quandle record lines.
    """
    params = command.params
    records = await data_processer.load_records(params["permgroup"])
    group = records.find("perm_groups", params.get("group_name"))
    x = parse_permutation(params["element"], group.degree)
    if x is None:
        return error_command(command, f"bad element {params['element']!r}")

    quandle, members = conj_quandle(
        group, x, name=params.get("name") or f"conj_{group.name}"
    )
    comments = [f"conjugation quandle in {group.name}"] + [
        f"{i + 1} = {format_labels(p)}" for i, p in enumerate(members)
    ]
    lines = format_quandle(quandle, comments)
    await data_processer.save_lines(params.get("out"), lines)
    if params.get("out") is None:
        command.output.extend(lines)
    return command
