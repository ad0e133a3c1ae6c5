import os
import sys
from typing import Sequence, Tuple, Union

import numpy as np
from loguru import logger

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../..")))

from src.structure import (
    Cocycle,
    Covering,
    ExtensionQuandle,
    FiberAction,
    FiniteGroup,
    Quandle,
    TangleColorError,
)
from src.algebra.utils.table import first_witness
from src.algebra.galex import validate_fiber_action


def trivial_cocycle(base: Quandle, coefficient: FiniteGroup, name: str = "") -> Cocycle:
    return Cocycle(
        base,
        coefficient,
        np.zeros((base.order, base.order), dtype=np.int64),
        name=name or "trivial",
    )


def default_section(covering: Covering) -> Tuple[int, ...]:
    """The smallest element of every fiber."""
    return tuple(min(covering.fiber_over(q)) for q in range(covering.base.order))


def extract_cocycle(
    covering: Covering,
    action: Union[FiberAction, None] = None,
    section: Union[Sequence[int], None] = None,
    name: str = "",
) -> Cocycle:
    """
    Solve s(x)*s(y) = φ(x,y)·s(x*y) for φ.

    Args:
        covering (Covering): The covering.
        action (FiberAction, optional): The deck group action. Defaults to
            the one carried by the covering.
        section (Sequence[int], optional): s as total-quandle indices.
            Defaults to the smallest element of every fiber.
        name (str, optional): The cocycle name.

    Returns:
        Cocycle: The cocycle, with the section recorded.

    Raises:
        TangleColorError: ActionNotDeck, ActionNotFree,
            ActionNotTransitiveOnFiber, BadSection or InvalidCocycle.
    """
    action = covering.action if action is None else action
    if action is None:
        error = "covering has no coefficient group action"
        logger.error(error)
        raise TangleColorError("ActionNotDeck", error)
    validate_fiber_action(covering, action)

    section = default_section(covering) if section is None else tuple(section)
    base = covering.base
    if len(section) != base.order:
        error = f"section has {len(section)} entries for {base.order} base elements"
        logger.error(error)
        raise TangleColorError("BadSection", error)
    for q, s in enumerate(section):
        if not 0 <= s < covering.total.order or covering.map[s] != q:
            error = f"s({q + 1}) does not lie over {q + 1}"
            logger.error(error)
            raise TangleColorError("BadSection", error)

    lam_of = np.empty(covering.total.order, dtype=np.int64)
    s = np.array(section, dtype=np.int64)
    lam_of[action.table[:, s]] = np.arange(action.group.order)[:, None]

    products = covering.total.table[np.ix_(s, s)]
    table = lam_of[products]

    cocycle = Cocycle(base, action.group, table, section=section, name=name or "phi")
    ok, error = validate_cocycle(cocycle)
    if not ok:
        logger.error(error)
        raise TangleColorError("InvalidCocycle", error)
    return cocycle


def validate_cocycle(cocycle: Cocycle) -> Tuple[bool, str]:
    """
    Check φ(a,a) = 1 and φ(a,b)φ(a*b,c) = φ(a,c)φ(a*c,b*c) for all a, b, c.

    Returns:
        Tuple[bool, str]: Result and the first violation, 1-based.
    """
    base = cocycle.base
    lam = cocycle.coefficient.table
    phi = cocycle.table
    n = base.order

    if phi.shape != (n, n):
        return False, "BadShape"
    if phi.min() < 0 or phi.max() >= cocycle.coefficient.order:
        return False, "LabelOutOfRange"

    witness = first_witness(phi[np.arange(n), np.arange(n)] != 0)
    if witness is not None:
        return False, f"NotNormalized({witness[0] + 1})"

    table = base.table
    for a in range(n):
        lhs = lam[phi[a][:, None], phi[table[a], :]]
        rhs = lam[
            np.broadcast_to(phi[a], (n, n)),
            phi[np.broadcast_to(table[a], (n, n)), table],
        ]
        witness = first_witness(lhs != rhs)
        if witness is not None:
            b, c = witness
            return False, f"CocycleCondition({a + 1},{b + 1},{c + 1})"

    return True, ""


def extension_quandle(cocycle: Cocycle, name: str = "") -> ExtensionQuandle:
    """
    Λ×_φX with (λ,a)*(μ,b) = (λφ(a,b), a*b), (λ, x) stored at x·|Λ| + λ.

    Raises:
        TangleColorError: InvalidCocycle.
    """
    ok, error = validate_cocycle(cocycle)
    if not ok:
        logger.error(error)
        raise TangleColorError("InvalidCocycle", error)

    order = cocycle.coefficient.order
    size = cocycle.base.order * order
    lam = np.arange(size) % order
    x = np.arange(size) // order
    table = (
        cocycle.base.table[np.ix_(x, x)] * order
        + cocycle.coefficient.table[lam[:, None], cocycle.table[np.ix_(x, x)]]
    )
    quandle = Quandle(
        table, name=name or f"{cocycle.coefficient.name}x{cocycle.base.name}"
    )
    return ExtensionQuandle(cocycle, quandle)


def extension_isomorphism(
    extension: ExtensionQuandle,
    action: FiberAction,
    section: Union[Sequence[int], None] = None,
) -> np.ndarray:
    """
    The map (λ, x) -> λ·s(x) from Λ×_φX to the total quandle of the action.

    Returns:
        np.ndarray: Images indexed by extension elements.
    """
    section = extension.cocycle.section if section is None else section
    s = np.array(section, dtype=np.int64)
    size = extension.quandle.order
    lam = np.arange(size) % extension.coefficient_order
    x = np.arange(size) // extension.coefficient_order
    return action.table[lam, s[x]]
