import os
import sys
import asyncio

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../../..")))

from src.structure import Command
from src.data.processer.interface import Interface as DataProcesser
from src.data.processer.textfile import format_cocycle, format_group, format_quandle
from src.data.utils.field import parse_labels
from src.algebra.galex import covering_p_lambda
from src.algebra.cocycle import extension_quandle, extract_cocycle
from src.handler.utils.utils import (
    error_command,
    load_group_and_automorphism,
    resolve_subgroup,
)


async def handle_extract(command: Command, data_processer: DataProcesser) -> Command:
    """
    Extract the cocycle of the covering GAlex(G,f) -> H(G,Λ,f).

    Writes the coefficient group, the base quandle and the cocycle as one
    record file, and optionally the extension quandle Λ×_φX to a second file.

    Args:
        command (Command): Carries params["group"], params["auto"],
            params["subgroup"], params["section"], params["out"] and
            params["extension_out"].
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: A summary line, plus the records when no output file is given.
    """
    params = command.params
    group, f = await load_group_and_automorphism(params, data_processer)
    subgroup = resolve_subgroup(group, f, params.get("subgroup"))
    covering = covering_p_lambda(group, f, subgroup)

    section = None
    if params.get("section"):
        tokens = params["section"].replace(",", " ").split()
        section = parse_labels(tokens, covering.base.order)
        if section is None:
            return error_command(command, f"bad section {params['section']!r}")

    cocycle = extract_cocycle(covering, section=section, name=params.get("name") or "phi")
    coefficient = cocycle.coefficient.renamed("Lambda")
    base = covering.base.renamed(f"H_{group.name}_{subgroup.order}")
    cocycle = cocycle.rebased(base, coefficient)

    lines = (
        format_group(coefficient)
        + format_quandle(base, [f"base of the covering of GAlex({group.name},{f.name})"])
        + format_cocycle(cocycle)
    )
    tasks = [data_processer.save_lines(params.get("out"), lines)]
    if params.get("extension_out"):
        extension = extension_quandle(cocycle, name=f"ext_{group.name}")
        tasks.append(
            data_processer.save_lines(
                params["extension_out"],
                format_quandle(extension.quandle, [f"extension by cocycle {cocycle.name}"]),
            )
        )
    await asyncio.gather(*tasks)

    command.output.append(
        f"OK {cocycle.name} |X|={base.order} |Λ|={coefficient.order}"
    )
    if params.get("out") is None:
        command.output.extend(lines)
    return command
