import os
import sys

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../../..")))

from src.structure import SYMMETRIES, Command
from src.data.processer.interface import Interface as DataProcesser
from src.invariant.symmetry import format_report_line, symmetry_report
from src.handler.utils.utils import load_quandle_and_knots, resolve_base


async def handle_symmetry(command: Command, data_processer: DataProcesser) -> Command:
    """
    Write a symmetry report line for every requested knot.

    Args:
        command (Command): Carries the psi parameters plus params["symmetries"].
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: One report line per knot.
    """
    params = command.params
    quandle, knots = await load_quandle_and_knots(params, data_processer)
    e = resolve_base(quandle, params.get("base", 1))
    symmetries = params.get("symmetries", SYMMETRIES)
    for braid in knots:
        report = symmetry_report(
            quandle, e, braid, symmetries, workers=params.get("workers", 1)
        )
        command.output.append(format_report_line(report))
    await data_processer.save_lines(params.get("out"), command.output)
    return command
