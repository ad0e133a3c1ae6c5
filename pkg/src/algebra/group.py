import os
import sys
from collections import deque
from typing import Callable, List, Sequence, Tuple, Union

import numpy as np
from loguru import logger

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../..")))

from src.config import settings
from src.structure import FiniteGroup, GroupAutomorphism, Subgroup, TangleColorError
from src.algebra.utils.table import check_square, first_witness


def validate_group(table, name: str = "") -> Tuple[Union[FiniteGroup, None], str]:
    """
    Validate a Cayley table with 0-based entries and index 0 as identity.

    Args:
        table (array-like): n x n table, table[a][b] = a·b.
        name (str, optional): The record name. Defaults to "".

    Returns:
        Tuple[Union[FiniteGroup, None], str]: The group, or None and the first
            violated law with a 1-based witness.
    """
    table, error = check_square(table)
    if error:
        return None, error

    n = table.shape[0]
    ids = np.arange(n)
    if not (np.array_equal(table[0], ids) and np.array_equal(table[:, 0], ids)):
        return None, "NoIdentity"

    for a in range(n):
        if len(np.unique(table[a])) != n:
            return None, f"NotLatinSquare(row {a + 1})"
    for b in range(n):
        if len(np.unique(table[:, b])) != n:
            return None, f"NotLatinSquare(col {b + 1})"

    right_inverse = np.argmax(table == 0, axis=1)
    for a in range(n):
        if table[right_inverse[a], a] != 0:
            return None, f"NoInverse({a + 1})"

    for a in range(n):
        lhs = table[table[a], :]
        rhs = table[a][table]
        witness = first_witness(lhs != rhs)
        if witness is not None:
            b, c = witness
            return None, f"NotAssociative({a + 1},{b + 1},{c + 1})"

    return FiniteGroup(table, name=name), ""


def automorphism_from_images(
    group: FiniteGroup, images, name: str = ""
) -> Tuple[Union[GroupAutomorphism, None], str]:
    """
    Validate that images (0-based, images[a] = f(a)) define an automorphism.

    Returns:
        Tuple[Union[GroupAutomorphism, None], str]: The automorphism or None
            and the violation.
    """
    images = np.asarray(images, dtype=np.int64)
    if images.shape != (group.order,):
        return None, f"BadLength({images.size})"
    if images.min() < 0 or images.max() >= group.order:
        return None, "NotBijective"
    if len(np.unique(images)) != group.order:
        return None, "NotBijective"

    lhs = images[group.table]
    rhs = group.table[np.ix_(images, images)]
    witness = first_witness(lhs != rhs)
    if witness is not None:
        a, b = witness
        return None, f"NotHomomorphism({a + 1},{b + 1})"

    return GroupAutomorphism(group, images, name=name), ""


def identity_automorphism(group: FiniteGroup) -> GroupAutomorphism:
    return GroupAutomorphism(group, np.arange(group.order), name="id")


def compose(f: GroupAutomorphism, g: GroupAutomorphism) -> GroupAutomorphism:
    """Return f∘g, i.e. apply g first."""
    return GroupAutomorphism(f.group, f.images[g.images])


def inverse_automorphism(f: GroupAutomorphism) -> GroupAutomorphism:
    return GroupAutomorphism(f.group, np.argsort(f.images))


def conjugate_automorphism(g: GroupAutomorphism, f: GroupAutomorphism) -> GroupAutomorphism:
    """Return g∘f∘g⁻¹."""
    return compose(compose(g, f), inverse_automorphism(g))


def fix_subgroup(group: FiniteGroup, f: GroupAutomorphism) -> Subgroup:
    fixed = np.flatnonzero(f.images == np.arange(group.order))
    return Subgroup(group, fixed.tolist())


def is_abelian(group) -> bool:
    """
    Decide commutativity of a FiniteGroup or of a Subgroup of one.

    Subgroups of a PermGroup are checked by composing image tuples.
    """
    if isinstance(group, FiniteGroup):
        return bool(np.array_equal(group.table, group.table.T))

    if isinstance(group.parent, FiniteGroup):
        elements = np.array(group.elements, dtype=np.int64)
        block = group.parent.table[np.ix_(elements, elements)]
        return bool(np.array_equal(block, block.T))

    perms = np.array(group.elements, dtype=np.int64)
    for p in perms:
        # p then q versus q then p, for every q at once
        if not np.array_equal(perms[:, p], p[perms]):
            return False
    return True


def element_orders(group: FiniteGroup) -> np.ndarray:
    orders = np.ones(group.order, dtype=np.int64)
    power = np.arange(group.order)
    rows = np.arange(group.order)
    pending = power != 0
    k = 1
    while pending.any():
        power = group.table[power, rows]
        k += 1
        done = pending & (power == 0)
        orders[done] = k
        pending &= ~done
    return orders


def generated_subgroup(group: FiniteGroup, generators: Sequence[int]) -> Subgroup:
    """
    Close a set of elements under multiplication.

    Args:
        group (FiniteGroup): The ambient group.
        generators (Sequence[int]): 0-based generators.

    Returns:
        Subgroup: The subgroup they generate.
    """
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = group.rows[x][g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return Subgroup(group, seen)


def is_subgroup(group: FiniteGroup, elements: Sequence[int]) -> bool:
    members = np.array(sorted(set(elements)), dtype=np.int64)
    if members.size == 0 or members[0] != 0:
        return False
    products = group.table[np.ix_(members, members)]
    return bool(np.isin(products, members).all())


def greedy_generators(group: FiniteGroup) -> List[int]:
    """
    Pick generators greedily, trying elements of larger order first.

    Returns:
        List[int]: A generating set, empty for the trivial group.
    """
    orders = element_orders(group)
    candidates = sorted(range(1, group.order), key=lambda x: (-orders[x], x))
    generators: List[int] = []
    span = {0}
    for x in candidates:
        if len(span) == group.order:
            break
        if x in span:
            continue
        generators.append(x)
        span = set(generated_subgroup(group, generators).elements)
    return generators


def cyclic_group(n: int, name: str = "") -> FiniteGroup:
    ids = np.arange(n)
    return FiniteGroup((ids[:, None] + ids[None, :]) % n, name=name or f"Z{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str = "") -> FiniteGroup:
    """
    Build G×H with (a, b) stored at a·|H| + b, so (0, 0) stays the identity.
    """
    first = np.repeat(np.arange(g.order), h.order)
    second = np.tile(np.arange(h.order), g.order)
    table = (
        g.table[np.ix_(first, first)] * h.order + h.table[np.ix_(second, second)]
    )
    return FiniteGroup(table, name=name or f"{g.name}x{h.name}")


def group_from_elements(
    elements: Sequence, multiply: Callable, name: str = ""
) -> FiniteGroup:
    """
    Build a Cayley table from hashable elements and a product function.

    Args:
        elements (Sequence): All elements, identity first.
        multiply (Callable): multiply(a, b) -> a·b.
        name (str, optional): The group name. Defaults to "".

    Returns:
        FiniteGroup: The group on indices of elements.
    """
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[multiply(a, b)] for b in elements] for a in elements]
    group, error = validate_group(np.array(table, dtype=np.int64), name=name)
    if group is None:
        error = f"elements do not form a group: {error}"
        logger.error(error)
        raise TangleColorError("InvalidGroup", error)
    return group


def subgroup_as_group(subgroup: Subgroup, name: str = "") -> FiniteGroup:
    """
    Relabel a subgroup of a FiniteGroup as a group of its own.

    Label i is the i-th smallest element, so the identity stays at 0.
    """
    elements = np.array(subgroup.elements, dtype=np.int64)
    position = np.full(subgroup.parent.order, -1, dtype=np.int64)
    position[elements] = np.arange(elements.size)
    table = position[subgroup.parent.table[np.ix_(elements, elements)]]
    return FiniteGroup(table, name=name)


def right_cosets(
    group: FiniteGroup, subgroup: Subgroup
) -> Tuple[List[Tuple[int, ...]], np.ndarray]:
    """
    Partition G into right cosets Hg, ordered by their smallest element.

    Returns:
        Tuple[List[Tuple[int, ...]], np.ndarray]: The sorted cosets and
            coset_of[g] = index of the coset holding g.
    """
    members = np.array(subgroup.elements, dtype=np.int64)
    coset_of = np.full(group.order, -1, dtype=np.int64)
    cosets: List[Tuple[int, ...]] = []
    for g in range(group.order):
        if coset_of[g] >= 0:
            continue
        coset = np.sort(group.table[members, g])
        coset_of[coset] = len(cosets)
        cosets.append(tuple(coset.tolist()))
    return cosets, coset_of


def _extend(
    group: FiniteGroup,
    generators: Sequence[int],
    images: Sequence[int],
) -> Union[np.ndarray, None]:
    """
    Extend generator images to a homomorphism on the subgroup they generate.

    Returns None when the assignment is inconsistent or not injective.
    """
    mapping = np.full(group.order, -1, dtype=np.int64)
    mapping[0] = 0
    used = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g, img in zip(generators, images):
            y = group.rows[x][g]
            value = group.rows[mapping[x]][img]
            if mapping[y] >= 0:
                if mapping[y] != value:
                    return None
                continue
            if value in used:
                return None
            mapping[y] = value
            used.add(value)
            queue.append(y)
    return mapping


def enumerate_automorphisms(
    group: FiniteGroup, bound: Union[int, None] = None
) -> List[List[GroupAutomorphism]]:
    """
    Enumerate Aut(G) by backtracking over images of a generating set.

    Images of each generator are restricted to elements of the same order,
    and partial assignments are pruned as soon as the map on the subgroup
    generated so far stops being an injective homomorphism.

    Args:
        group (FiniteGroup): The group.
        bound (int, optional): Largest order handled. Defaults to the
            TANGLECOLOR_MAX_AUT_ORDER setting.

    Returns:
        List[List[GroupAutomorphism]]: Aut(G) split into conjugacy classes,
            the class of the identity first, each class in ascending image order.

    Raises:
        TangleColorError: GroupTooLarge when |G| exceeds the bound.
    """
    bound = settings.max_aut_order if bound is None else bound
    if group.order > bound:
        error = f"|G|={group.order} exceeds {bound}, supply automorphisms explicitly"
        logger.error(error)
        raise TangleColorError("GroupTooLarge", error)

    generators = greedy_generators(group)
    orders = element_orders(group)
    candidates = [
        [y for y in range(group.order) if orders[y] == orders[g]] for g in generators
    ]

    found: List[np.ndarray] = []

    def search(k: int, chosen: List[int]) -> None:
        if k == len(generators):
            mapping = _extend(group, generators, chosen)
            if mapping is not None and (mapping >= 0).all():
                found.append(mapping)
            return
        for y in candidates[k]:
            if y in chosen:
                continue
            if _extend(group, generators[: k + 1], chosen + [y]) is None:
                continue
            search(k + 1, chosen + [y])

    search(0, [])
    logger.debug(f"{group.name}: {len(found)} automorphisms from {len(generators)} generators")

    autos = sorted(
        (GroupAutomorphism(group, images) for images in found), key=lambda f: f.key()
    )
    return automorphism_classes(autos)


def automorphism_classes(
    autos: List[GroupAutomorphism],
) -> List[List[GroupAutomorphism]]:
    """Split a list closed under composition into conjugacy classes."""
    index = {f.key(): i for i, f in enumerate(autos)}
    inverses = [inverse_automorphism(f) for f in autos]
    classified = [False] * len(autos)
    classes: List[List[GroupAutomorphism]] = []
    for i, f in enumerate(autos):
        if classified[i]:
            continue
        members = set()
        for g, g_inv in zip(autos, inverses):
            members.add(index[compose(compose(g, f), g_inv).key()])
        for j in members:
            classified[j] = True
        classes.append([autos[j] for j in sorted(members)])
    return classes
