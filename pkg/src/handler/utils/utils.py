import os
import sys
import asyncio
from typing import List, Tuple, Union

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../../..")))

from src.structure import (
    BraidWord,
    Command,
    FiniteGroup,
    GroupAutomorphism,
    Quandle,
    Subgroup,
    TangleColorError,
)
from src.data.processer.interface import Interface as DataProcesser
from src.data.utils.field import parse_labels
from src.algebra.group import fix_subgroup, generated_subgroup
from src.knot.braid import parse_inline_braid


def error_command(command: Command, error: str) -> Command:
    """
    Mark a command as failed.

    Args:
        command (Command): The command.
        error (str): The one-line diagnostic.

    Returns:
        Command: The updated command.
    """
    command.valid = False
    command.error = error
    return command


async def load_quandle(params: dict, data_processer: DataProcesser) -> Quandle:
    records = await data_processer.load_records(params["quandle"])
    return records.find("quandles", params.get("name"))


async def load_group_and_automorphism(
    params: dict, data_processer: DataProcesser
) -> Tuple[FiniteGroup, GroupAutomorphism]:
    records = await data_processer.load_records(params["group"])
    auto = records.find("automorphisms", params.get("auto"))
    return auto.group, auto


def resolve_subgroup(
    group: FiniteGroup, f: GroupAutomorphism, text: Union[str, None]
) -> Subgroup:
    """
    "fix" (or nothing) selects Fix(G,f); otherwise a comma separated list of
    1-based generators.
    """
    if text is None or text == "fix":
        return fix_subgroup(group, f)
    tokens = text.replace(",", " ").split()
    generators = parse_labels(tokens, len(tokens))
    if generators is None or any(not 0 <= g < group.order for g in generators):
        raise TangleColorError("ParseError", f"bad subgroup generators {text!r}")
    return generated_subgroup(group, generators)


def resolve_base(quandle: Quandle, label: int) -> int:
    if not 1 <= label <= quandle.order:
        raise TangleColorError(
            "ParseError", f"base point {label} outside 1..{quandle.order} of {quandle.name}"
        )
    return label - 1


async def load_knots(params: dict, data_processer: DataProcesser) -> List[BraidWord]:
    if params.get("braid"):
        braid, error = parse_inline_braid(params["braid"])
        if braid is None:
            raise TangleColorError("ParseError", f"--braid {params['braid']!r}: {error}")
        return [braid]
    if params.get("knots"):
        records = await data_processer.load_records(params["knots"])
        return records.knots
    raise TangleColorError("MissingRecord", "give --braid or --knots")


async def load_quandle_and_knots(
    params: dict, data_processer: DataProcesser
) -> Tuple[Quandle, List[BraidWord]]:
    return await asyncio.gather(
        load_quandle(params, data_processer), load_knots(params, data_processer)
    )
