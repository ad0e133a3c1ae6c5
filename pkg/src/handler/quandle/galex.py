import os
import sys

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../../..")))

from src.structure import Command
from src.data.processer.interface import Interface as DataProcesser
from src.data.processer.textfile import format_automorphism, format_quandle
from src.algebra.group import enumerate_automorphisms, fix_subgroup
from src.algebra.galex import galex
from src.algebra.quandle import is_connected
from src.handler.utils.utils import load_group_and_automorphism


async def handle_galex(command: Command, data_processer: DataProcesser) -> Command:
    """
    Build GAlex(G,f), or list the automorphism classes of G.

    With params["list"] every Aut(G) class is printed with |Fix| and the
    connectedness of its GAlex quandle, and the representatives are written
    as `auto` records.

    Args:
        command (Command): The command.
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: The quandle record lines, or the class listing.
    """
    params = command.params
    if params.get("list"):
        records = await data_processer.load_records(params["group"])
        group = records.find("groups", params.get("group_name"))
        lines = []
        for k, members in enumerate(enumerate_automorphisms(group)):
            f = members[0].renamed(f"f{k + 1}")
            connected = is_connected(galex(group, f))
            command.output.append(
                f"{f.name}\tsize={len(members)}\t|Fix|={fix_subgroup(group, f).order}"
                f"\tconnected={'yes' if connected else 'no'}"
            )
            lines.extend(format_automorphism(f))
        await data_processer.save_lines(params.get("out"), lines)
        return command

    group, f = await load_group_and_automorphism(params, data_processer)
    quandle = galex(group, f, name=params.get("name") or f"GAlex_{group.name}_{f.name}")
    lines = format_quandle(quandle, [f"GAlex of group {group.name} under {f.name}"])
    await data_processer.save_lines(params.get("out"), lines)
    if params.get("out") is None:
        command.output.extend(lines)
    return command
