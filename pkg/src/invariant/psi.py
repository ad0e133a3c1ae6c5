import os
import sys

from loguru import logger

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../..")))

from src.structure import BraidWord, PsiVector, Quandle, TangleColorError
from src.algebra.quandle import fiber, require_connected
from src.invariant.coloring import tangle_colorings


def psi(quandle: Quandle, e: int, braid: BraidWord, workers: int = 1) -> PsiVector:
    """
    Ψ^e_Q(K): colorings of the tangle with top arc e, counted by bottom arc.

    Args:
        quandle (Quandle): A connected quandle.
        e (int): The base point, 0-based.
        braid (BraidWord): The knot.
        workers (int, optional): Processes for the coloring search. Defaults to 1.

    Returns:
        PsiVector: Counts over F_e, e first.

    Raises:
        TangleColorError: NotConnected, or EndArcViolation if a bottom arc
            leaves the fiber of e.
    """
    require_connected(quandle)
    fib = fiber(quandle, e)
    bottoms = tangle_colorings(quandle, braid, e, workers=workers)

    counts = [0] * fib.size
    for b, count in bottoms.items():
        if b not in fib:
            error = f"{braid.name}/{quandle.name}: bottom arc {b + 1} outside F_{e + 1}"
            logger.error(error)
            raise TangleColorError("EndArcViolation", error)
        counts[fib.position(b)] += count

    return PsiVector(quandle.name, e, fib.elements, counts)


def col_with_ends(quandle: Quandle, braid: BraidWord, a: int, b: int) -> int:
    """Col^{a,b}(T): tangle colorings from top color a to bottom color b."""
    return tangle_colorings(quandle, braid, a)[b]
