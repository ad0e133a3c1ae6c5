import os
import sys

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.structure import Command
from src.data.processer.interface import Interface as DataProcesser
from src.storage import register_handler


from src.handler.quandle.check import handle_check as handle_quandle_check
from src.handler.quandle.info import handle_info as handle_quandle_info
from src.handler.quandle.galex import handle_galex as handle_quandle_galex
from src.handler.quandle.conj import handle_conj as handle_quandle_conj
from src.handler.quandle.homog import handle_homog as handle_quandle_homog


from src.handler.cocycle.extract import handle_extract as handle_cocycle_extract
from src.handler.cocycle.check import handle_check as handle_cocycle_check


from src.handler.invariant.psi import handle_psi
from src.handler.invariant.symmetry import handle_symmetry
from src.handler.invariant.sweep import handle_sweep


@register_handler("quandle-check")
async def quandle_check(command: Command, data_processer: DataProcesser) -> Command:
    """
    Handle the 'quandle check' command.

    Args:
        command (Command): The command object.
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: The updated command object.
    """
    return await handle_quandle_check(command, data_processer)


@register_handler("quandle-info")
async def quandle_info(command: Command, data_processer: DataProcesser) -> Command:
    """
    Handle the 'quandle info' command.

    Args:
        command (Command): The command object.
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: The updated command object.
    """
    return await handle_quandle_info(command, data_processer)


@register_handler("quandle-galex")
async def quandle_galex(command: Command, data_processer: DataProcesser) -> Command:
    """
    Handle the 'quandle galex' command.

    Args:
        command (Command): The command object.
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: The updated command object.
    """
    return await handle_quandle_galex(command, data_processer)


@register_handler("quandle-conj")
async def quandle_conj(command: Command, data_processer: DataProcesser) -> Command:
    """
    Handle the 'quandle conj' command.

    Args:
        command (Command): The command object.
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: The updated command object.
    """
    return await handle_quandle_conj(command, data_processer)


@register_handler("quandle-homog")
async def quandle_homog(command: Command, data_processer: DataProcesser) -> Command:
    """
    Handle the 'quandle homog' command.

    Args:
        command (Command): The command object.
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: The updated command object.
    """
    return await handle_quandle_homog(command, data_processer)


@register_handler("cocycle-extract")
async def cocycle_extract(command: Command, data_processer: DataProcesser) -> Command:
    """
    Handle the 'cocycle extract' command.

    Args:
        command (Command): The command object.
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: The updated command object.
    """
    return await handle_cocycle_extract(command, data_processer)


@register_handler("cocycle-check")
async def cocycle_check(command: Command, data_processer: DataProcesser) -> Command:
    """
    Handle the 'cocycle check' command.

    Args:
        command (Command): The command object.
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: The updated command object.
    """
    return await handle_cocycle_check(command, data_processer)


@register_handler("psi")
async def psi(command: Command, data_processer: DataProcesser) -> Command:
    """
    Handle the 'psi' command.

    Args:
        command (Command): The command object.
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: The updated command object.
    """
    return await handle_psi(command, data_processer)


@register_handler("symmetry")
async def symmetry(command: Command, data_processer: DataProcesser) -> Command:
    """
    Handle the 'symmetry' command.

    Args:
        command (Command): The command object.
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: The updated command object.
    """
    return await handle_symmetry(command, data_processer)


@register_handler("sweep")
async def sweep(command: Command, data_processer: DataProcesser) -> Command:
    """
    Handle the 'sweep' command.

    Args:
        command (Command): The command object.
        data_processer (DataProcesser): The data processer object.

    Returns:
        Command: The updated command object.
    """
    return await handle_sweep(command, data_processer)
