import os
import sys
from collections import deque
from typing import List, Sequence, Tuple, Union

import numpy as np
from loguru import logger
from sympy.combinatorics import Permutation

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../..")))

from src.config import settings
from src.structure import FiniteGroup, PermGroup, Subgroup, TangleColorError


def validate_perm_group(
    degree: int, generators: Sequence[Sequence[int]], name: str = ""
) -> Tuple[Union[PermGroup, None], str]:
    """
    Validate 0-based generator image arrays.

    Returns:
        Tuple[Union[PermGroup, None], str]: The group, or None and the
            violation naming the 1-based generator position.
    """
    if degree < 1:
        return None, "BadDegree"
    for k, gen in enumerate(generators):
        if len(gen) != degree:
            return None, f"BadLength(gen {k + 1})"
        if sorted(gen) != list(range(degree)):
            return None, f"NotBijective(gen {k + 1})"
    return PermGroup(degree, generators, name=name), ""


def to_perm(g: Sequence[int]) -> Permutation:
    return Permutation(list(g))


def _check_bound(order: int, bound: Union[int, None], what: str) -> None:
    bound = settings.max_inn_order if bound is None else bound
    if order > bound:
        error = f"{what} of order {order} exceeds the enumeration bound {bound}"
        logger.error(error)
        raise TangleColorError("OrderOverflow", error)


def perm_order(group: PermGroup) -> int:
    return group.order


def perm_contains(group: PermGroup, g: Sequence[int]) -> bool:
    if len(g) != group.degree or sorted(g) != list(range(group.degree)):
        return False
    return bool(group.sympy_group.contains(to_perm(g)))


def elements(group: PermGroup, bound: Union[int, None] = None) -> List[Tuple[int, ...]]:
    """
    List every element as a sorted image tuple, identity first.

    Raises:
        TangleColorError: OrderOverflow when |P| exceeds the bound.
    """
    _check_bound(group.order, bound, "permutation group")
    return sorted(tuple(p.array_form) for p in group.sympy_group.generate())


def stabilizer_group(group: PermGroup, point: int) -> PermGroup:
    return PermGroup.from_sympy(group.sympy_group.stabilizer(point))


def stabilizer(group: PermGroup, point: int, bound: Union[int, None] = None) -> Subgroup:
    stab = stabilizer_group(group, point)
    return Subgroup(group, elements(stab, bound))


def derived_subgroup(group: PermGroup, bound: Union[int, None] = None) -> PermGroup:
    """
    Compute G′ and check it against the commutators of the generators.

    Raises:
        TangleColorError: OrderOverflow when |P| exceeds the bound.
    """
    _check_bound(group.order, bound, "permutation group")
    derived = group.sympy_group.derived_subgroup()

    gens = [to_perm(g) for g in group.generators]
    for a in gens:
        for b in gens:
            commutator = ~a * ~b * a * b
            if not derived.contains(commutator):
                error = f"commutator of generators missing from derived subgroup of {group.name}"
                logger.error(error)
                raise TangleColorError("DerivedSubgroupMismatch", error)

    logger.debug(f"{group.name}: |G|={group.order} |G'|={derived.order()}")
    return PermGroup.from_sympy(derived, name=f"{group.name}'")


def centralizer(
    group: PermGroup, x: Sequence[int], bound: Union[int, None] = None
) -> Subgroup:
    _check_bound(group.order, bound, "permutation group")
    cent = group.sympy_group.centralizer(to_perm(x))
    return Subgroup(group, [tuple(p.array_form) for p in cent.generate()])


def conjugacy_class(
    group: PermGroup, x: Sequence[int], bound: Union[int, None] = None
) -> List[Tuple[int, ...]]:
    """
    The orbit of x under conjugation, in breadth-first discovery order.

    Args:
        group (PermGroup): The acting group.
        x (Sequence[int]): An element of the group as an image tuple.
        bound (int, optional): Largest class size. Defaults to the
            TANGLECOLOR_MAX_INN_ORDER setting.

    Returns:
        List[Tuple[int, ...]]: The class, x first.

    Raises:
        TangleColorError: NotMember when x is not in the group, OrderOverflow
            when the class outgrows the bound.
    """
    bound = settings.max_inn_order if bound is None else bound
    if not perm_contains(group, x):
        error = f"{tuple(i + 1 for i in x)} is not an element of {group.name}"
        logger.error(error)
        raise TangleColorError("NotMember", error)

    gens = [np.array(g, dtype=np.int64) for g in group.generators]
    inverses = [np.argsort(g) for g in gens]
    start = tuple(int(i) for i in x)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        y = np.array(queue.popleft(), dtype=np.int64)
        for g, g_inv in zip(gens, inverses):
            # g⁻¹ y g: apply g⁻¹, then y, then g
            z = tuple(g[y[g_inv]].tolist())
            if z in seen:
                continue
            seen.add(z)
            order.append(z)
            queue.append(z)
            if len(order) > bound:
                _check_bound(len(order), bound, "conjugacy class")
    return order


def group_from_perm_group(
    group: PermGroup, bound: Union[int, None] = None, name: str = ""
) -> Tuple[FiniteGroup, List[Tuple[int, ...]]]:
    """
    Turn a permutation group into a Cayley table.

    Elements are listed in ascending image order (identity first) and the
    product a·b means apply a, then b.

    Returns:
        Tuple[FiniteGroup, List[Tuple[int, ...]]]: The group and its elements.

    Raises:
        TangleColorError: OrderOverflow above TANGLECOLOR_MAX_TABLE_ORDER.
    """
    bound = settings.max_table_order if bound is None else bound
    _check_bound(group.order, bound, "Cayley table")
    listing = elements(group)
    index = {p: i for i, p in enumerate(listing)}
    array = np.array(listing, dtype=np.int64)
    table = np.empty((len(listing), len(listing)), dtype=np.int64)
    for a in range(len(listing)):
        products = array[:, array[a]]
        table[a] = [index[tuple(row)] for row in products.tolist()]
    return FiniteGroup(table, name=name or group.name), listing
