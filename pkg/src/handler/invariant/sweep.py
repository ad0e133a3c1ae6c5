import os
import sys
import asyncio
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence, Tuple, Union

from loguru import logger

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../../..")))

from src.structure import BraidWord, Command, Quandle, SweepJob, TangleColorError
from src.data.processer.interface import Interface as DataProcesser
from src.algebra.quandle import is_connected
from src.invariant.symmetry import format_report_line, symmetry_report
from src.handler.utils.utils import error_command, resolve_base


def sweep_pair(
    quandle: Quandle, braid: BraidWord, e: int, symmetries: Sequence[str]
) -> Tuple[Union[str, None], str]:
    """
    One sweep cell, run in a worker process.

    Returns:
        Tuple[Union[str, None], str]: The report line or None and the error.
    """
    try:
        return format_report_line(symmetry_report(quandle, e, braid, symmetries)), ""
    except TangleColorError as e:
        return None, str(e)


async def handle_sweep(command: Command, data_processer: DataProcesser) -> Command:
    """
    Run symmetry reports over every (quandle, knot) pair.

    Pairs are visited quandle-major in file and record order; results are
    emitted in that order whatever the worker count.

    Args:
        command (Command): Carries params["quandles"], params["knots"],
            params["symmetries"], params["base"], params["out"] and
            params["workers"].
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: One report line per pair.
    """
    params = command.params
    record_sets = await data_processer.load_directory(params["quandles"])
    job = SweepJob(
        [r.path for r in record_sets],
        params["knots"],
        base=params.get("base", 1),
        symmetries=tuple(params.get("symmetries", ("m", "r", "rm"))),
        out=params.get("out"),
        workers=params.get("workers", 1),
    )
    if job.workers < 1:
        return error_command(command, f"worker count must be at least 1, got {job.workers}")

    knots = (await data_processer.load_records(job.knot_file)).knots
    cells = []
    for records in record_sets:
        for quandle in records.quandles:
            if not is_connected(quandle):
                return error_command(
                    command, f"{records.path}: record {quandle.name}: NotConnected"
                )
            e = resolve_base(quandle, job.base)
            cells.extend((quandle, braid, e, job.symmetries) for braid in knots)

    logger.info(f"sweep: {len(cells)} pairs on {job.workers} workers")
    if job.workers == 1:
        results = []
        for cell in cells:
            results.append(sweep_pair(*cell))
            logger.info(f"sweep: {cell[0].name} x {cell[1].name} done")
    else:
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=job.workers) as executor:
            tasks = [loop.run_in_executor(executor, sweep_pair, *cell) for cell in cells]
            results = await asyncio.gather(*tasks)

    for line, error in results:
        if line is None:
            return error_command(command, error)
        command.output.append(line)

    await data_processer.save_lines(job.out, command.output)
    return command
