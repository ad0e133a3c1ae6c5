import os
import sys

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../../..")))

from src.structure import Command
from src.data.processer.interface import Interface as DataProcesser
from src.invariant.psi import psi
from src.handler.utils.utils import load_quandle_and_knots, resolve_base


async def handle_psi(command: Command, data_processer: DataProcesser) -> Command:
    """
    Compute Ψ^e_Q for every requested knot.

    Args:
        command (Command): Carries params["quandle"], params["braid"] or
            params["knots"], params["base"] and params["workers"].
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: One `<knot>\\t<quandle>\\tpsi=...` line per knot.
    """
    params = command.params
    quandle, knots = await load_quandle_and_knots(params, data_processer)
    e = resolve_base(quandle, params.get("base", 1))
    for braid in knots:
        vector = psi(quandle, e, braid, workers=params.get("workers", 1))
        command.output.append(f"{braid.name}\t{quandle.name}\tpsi={vector.format()}")
    await data_processer.save_lines(params.get("out"), command.output)
    return command
