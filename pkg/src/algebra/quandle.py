import os
import sys
from collections import Counter, deque
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np
from loguru import logger

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../..")))

from src.config import settings
from src.structure import (
    Fiber,
    InnerGroup,
    PermGroup,
    Quandle,
    TangleColorError,
)
from src.algebra.utils.table import check_square, first_witness, is_permutation
from src.algebra.perm_group import conjugacy_class


def validate_quandle(table, name: str = "") -> Tuple[Union[Quandle, None], str]:
    """
    Validate a quandle table with 0-based entries, table[i][j] = i*j.

    Args:
        table (array-like): n x n operation table.
        name (str, optional): The record name. Defaults to "".

    Returns:
        Tuple[Union[Quandle, None], str]: The quandle, or None and the first
            violated axiom with a 1-based witness.
    """
    table, error = check_square(table)
    if error:
        return None, error

    n = table.shape[0]
    diagonal = table[np.arange(n), np.arange(n)]
    witness = first_witness(diagonal != np.arange(n))
    if witness is not None:
        return None, f"NotIdempotent({witness[0] + 1})"

    for b in range(n):
        if not is_permutation(table[:, b]):
            return None, f"ColumnNotBijective({b + 1})"

    for a in range(n):
        lhs = table[table[a], :]
        rhs = table[np.broadcast_to(table[a], (n, n)), table]
        witness = first_witness(lhs != rhs)
        if witness is not None:
            b, c = witness
            return None, f"NotDistributive({a + 1},{b + 1},{c + 1})"

    return Quandle(table, name=name), ""


def star_inv(quandle: Quandle, c: int, b: int) -> int:
    """The unique a with a*b = c."""
    return quandle.div_rows[c][b]


def trivial_quandle(n: int, name: str = "") -> Quandle:
    return Quandle(np.repeat(np.arange(n), n).reshape(n, n), name=name or f"T{n}")


def dihedral_quandle(n: int, name: str = "") -> Quandle:
    ids = np.arange(n)
    return Quandle((2 * ids[None, :] - ids[:, None]) % n, name=name or f"R{n}")


def inner_group(quandle: Quandle) -> InnerGroup:
    """
    Build Inn(Q) from the distinct columns of Q.

    Returns:
        InnerGroup: Generators in order of first appearance, with inn_map.
    """
    columns: Dict[tuple, int] = {}
    inn_map = np.empty(quandle.order, dtype=np.int64)
    for a in range(quandle.order):
        column = quandle.column(a)
        inn_map[a] = columns.setdefault(column, len(columns))
    perm_group = PermGroup(quandle.order, list(columns), name=f"Inn({quandle.name})")
    return InnerGroup(quandle, perm_group, inn_map)


def orbit(quandle: Quandle, x: int) -> List[int]:
    seen = {x}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for z in quandle.rows[y]:
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return sorted(seen)


def orbits(quandle: Quandle) -> List[List[int]]:
    remaining = set(range(quandle.order))
    result = []
    while remaining:
        block = orbit(quandle, min(remaining))
        remaining -= set(block)
        result.append(block)
    return result


def is_connected(quandle: Quandle) -> bool:
    return len(orbit(quandle, 0)) == quandle.order


def is_faithful(quandle: Quandle) -> bool:
    return len(np.unique(quandle.table, axis=1).T) == quandle.order


def fiber(quandle: Quandle, e: int) -> Fiber:
    same = np.all(quandle.table == quandle.table[:, [e]], axis=0)
    return Fiber(e, np.flatnonzero(same).tolist())


def fiber_sizes(quandle: Quandle) -> List[int]:
    """Sizes of all distinct fibers, in ascending order."""
    return sorted(Counter(map(tuple, quandle.table.T.tolist())).values())


def require_connected(quandle: Quandle) -> None:
    if not is_connected(quandle):
        error = f"quandle {quandle.name} is not connected"
        logger.error(error)
        raise TangleColorError("NotConnected", error)


def pair_orbit_classes(
    quandle: Quandle, e: int, bound: Union[int, None] = None
) -> List[Tuple[int, ...]]:
    """
    Partition F_e by the Inn(Q)-orbits of the pairs (e, b).

    Pairs are expanded breadth-first under (x, y) -> (x*a, y*a). Blocks are
    sorted, and listed in the fiber order of their first element.

    Raises:
        TangleColorError: NotConnected, or OrderOverflow when the pair space
            exceeds the enumeration bound.
    """
    bound = settings.max_inn_order if bound is None else bound
    require_connected(quandle)
    if quandle.order * quandle.order > bound:
        error = f"pair space of {quandle.name} exceeds the enumeration bound {bound}"
        logger.error(error)
        raise TangleColorError("OrderOverflow", error)

    fib = fiber(quandle, e)
    rows = quandle.rows
    classified: Dict[int, int] = {}
    blocks: List[List[int]] = []
    for b in fib.elements:
        if b in classified:
            continue
        block = []
        seen = {(e, b)}
        queue = deque([(e, b)])
        while queue:
            x, y = queue.popleft()
            if x == e:
                block.append(y)
                classified[y] = len(blocks)
            for a in range(quandle.order):
                pair = (rows[x][a], rows[y][a])
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
        blocks.append(sorted(block))
    return [tuple(block) for block in blocks]


def transversal(quandle: Quandle, e: int) -> Dict[int, np.ndarray]:
    """
    For every x in the orbit of e, an element t of Inn(Q) with t(e) = x.

    Returns:
        Dict[int, np.ndarray]: x -> t as an image array.
    """
    table = quandle.table
    paths = {e: np.arange(quandle.order)}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        t = paths[x]
        for a in range(quandle.order):
            y = quandle.rows[x][a]
            if y not in paths:
                # apply t, then R_a
                paths[y] = table[t, a]
                queue.append(y)
    return paths


def end_permutation_p(
    quandle: Quandle, e: int, bound: Union[int, None] = None
) -> Tuple[int, ...]:
    """
    The involution p of fiber positions relating Ψ(K) and Ψ(rm K).

    For the fiber element at position j pick f_j in Inn(Q) with f_j(b_j) = e;
    then p(j) is the position of f_j(e). The map is well defined on pair orbit
    classes, and it is lifted to positions by matching class elements in
    ascending order.

    Returns:
        Tuple[int, ...]: p[j] for every fiber position j, with p[0] = 0.

    Raises:
        TangleColorError: NotConnected, OrderOverflow, or
            PermutationLawViolation when p fails to be an involution.
    """
    classes = pair_orbit_classes(quandle, e, bound)
    fib = fiber(quandle, e)
    class_of = {b: k for k, block in enumerate(classes) for b in block}
    paths = transversal(quandle, e)

    class_map = []
    for block in classes:
        t = paths[block[0]]
        # f = t⁻¹ maps block[0] back to e
        target = int(np.flatnonzero(t == e)[0])
        class_map.append(class_of[target])

    p = [0] * fib.size
    for k, block in enumerate(classes):
        image = classes[class_map[k]]
        if len(image) != len(block):
            error = f"pair classes {k + 1} and {class_map[k] + 1} of {quandle.name} differ in size"
            logger.error(error)
            raise TangleColorError("PermutationLawViolation", error)
        for b, c in zip(block, image):
            p[fib.position(b)] = fib.position(c)

    if p[0] != 0 or any(p[p[j]] != j for j in range(fib.size)):
        error = f"end permutation of {quandle.name} is not an involution fixing the base"
        logger.error(error)
        raise TangleColorError("PermutationLawViolation", error)
    return tuple(p)


def is_isomorphism(source: Quandle, target: Quandle, mapping) -> Tuple[bool, str]:
    """
    Check element-wise that mapping is a quandle isomorphism.

    Returns:
        Tuple[bool, str]: Result and the first violation, 1-based.
    """
    mapping = np.asarray(mapping, dtype=np.int64)
    if source.order != target.order or mapping.shape != (source.order,):
        return False, "OrderMismatch"
    if not is_permutation(mapping):
        return False, "NotBijective"
    lhs = mapping[source.table]
    rhs = target.table[np.ix_(mapping, mapping)]
    witness = first_witness(lhs != rhs)
    if witness is not None:
        a, b = witness
        return False, f"NotHomomorphism({a + 1},{b + 1})"
    return True, ""


def subquandle_closure(quandle: Quandle, elements: Sequence[int]) -> set:
    closed = set(elements)
    queue = deque(closed)
    while queue:
        x = queue.popleft()
        for y in list(closed):
            for z in (quandle.rows[x][y], quandle.rows[y][x]):
                if z not in closed:
                    closed.add(z)
                    queue.append(z)
    return closed


def quandle_generators(quandle: Quandle) -> List[int]:
    generators: List[int] = []
    span: set = set()
    for x in range(quandle.order):
        if x in span:
            continue
        generators.append(x)
        span = subquandle_closure(quandle, generators)
        if len(span) == quandle.order:
            break
    return generators


def element_signatures(quandle: Quandle) -> List[tuple]:
    """Isomorphism-invariant data per element, used to prune candidate images."""
    sizes = Counter(map(tuple, quandle.table.T.tolist()))
    orbit_size = {}
    for block in orbits(quandle):
        for x in block:
            orbit_size[x] = len(block)
    signatures = []
    for x in range(quandle.order):
        column = quandle.table[:, x]
        signatures.append(
            (
                sizes[tuple(column.tolist())],
                _cycle_type(column),
                len(set(quandle.rows[x])),
                orbit_size[x],
            )
        )
    return signatures


def _cycle_type(perm: np.ndarray) -> Tuple[int, ...]:
    seen = np.zeros(perm.size, dtype=bool)
    lengths = []
    for start in range(perm.size):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def _extend_mapping(
    source: Quandle, target: Quandle, mapping: Dict[int, int], used: set
) -> bool:
    """Close a partial map under the operation, in place. False on conflict."""
    queue = deque(mapping)
    while queue:
        x = queue.popleft()
        for y in list(mapping):
            for a, b in ((x, y), (y, x)):
                z = source.rows[a][b]
                value = target.rows[mapping[a]][mapping[b]]
                if z in mapping:
                    if mapping[z] != value:
                        return False
                    continue
                if value in used:
                    return False
                mapping[z] = value
                used.add(value)
                queue.append(z)
    return True


def quandle_isomorphic(
    first: Quandle, second: Quandle, bound: Union[int, None] = None
) -> Tuple[bool, Union[Tuple[int, ...], None]]:
    """
    Decide whether two quandles are isomorphic.

    Backtracks over images of a greedy generating set of the first quandle,
    restricted to elements with the same invariant signature, and closes
    each partial assignment under the operation.

    Args:
        first (Quandle): The source.
        second (Quandle): The target.
        bound (int, optional): Largest order handled. Defaults to the
            TANGLECOLOR_MAX_ISO_ORDER setting.

    Returns:
        Tuple[bool, Union[Tuple[int, ...], None]]: The decision and, when
            true, the isomorphism as an image tuple.

    Raises:
        TangleColorError: TooLarge above the bound.
    """
    bound = settings.max_iso_order if bound is None else bound
    if max(first.order, second.order) > bound:
        error = f"isomorphism search above order {bound} ({first.name}, {second.name})"
        logger.error(error)
        raise TangleColorError("TooLarge", error)
    if first.order != second.order:
        return False, None

    sig_first = element_signatures(first)
    sig_second = element_signatures(second)
    if sorted(sig_first) != sorted(sig_second):
        return False, None

    generators = quandle_generators(first)
    candidates = [
        [y for y in range(second.order) if sig_second[y] == sig_first[g]]
        for g in generators
    ]

    def search(k: int, mapping: Dict[int, int], used: set):
        if k == len(generators):
            return mapping if len(mapping) == first.order else None
        g = generators[k]
        if g in mapping:
            return search(k + 1, mapping, used)
        for y in candidates[k]:
            if y in used:
                continue
            trial = dict(mapping)
            trial[g] = y
            trial_used = used | {y}
            if not _extend_mapping(first, second, trial, trial_used):
                continue
            found = search(k + 1, trial, trial_used)
            if found is not None:
                return found
        return None

    found = search(0, {}, set())
    if found is None:
        return False, None
    witness = tuple(found[x] for x in range(first.order))
    ok, _ = is_isomorphism(first, second, witness)
    return ok, witness if ok else None


def conj_quandle(
    group: PermGroup, x: Sequence[int], bound: Union[int, None] = None, name: str = ""
) -> Tuple[Quandle, List[Tuple[int, ...]]]:
    """
    The conjugation quandle on the class of x, a*b = b⁻¹ab.

    Returns:
        Tuple[Quandle, List[Tuple[int, ...]]]: The quandle and the class
            elements in label order.
    """
    members = conjugacy_class(group, x, bound)
    index = {p: i for i, p in enumerate(members)}
    perms = np.array(members, dtype=np.int64)
    inverses = np.argsort(perms, axis=1)
    n = len(members)
    table = np.empty((n, n), dtype=np.int64)
    for b in range(n):
        # b⁻¹ a b for every a: apply b⁻¹, then a, then b
        conjugated = perms[b][perms[:, inverses[b]]]
        table[:, b] = [index[tuple(row)] for row in conjugated.tolist()]
    return Quandle(table, name=name or f"conj({group.name})"), members


def inn_image_quandle(quandle: Quandle) -> Tuple[Quandle, np.ndarray]:
    """
    inn(Q) as a quandle, R_a * R_b = R_{a*b}, together with a -> R_a.

    Returns:
        Tuple[Quandle, np.ndarray]: The image quandle on distinct columns in
            order of first appearance, and the map Q -> inn(Q).
    """
    inner = inner_group(quandle)
    inn_map = inner.inn_map
    reps = [int(np.flatnonzero(inn_map == k)[0]) for k in range(len(inner.perm_group.generators))]
    reps_array = np.array(reps, dtype=np.int64)
    table = inn_map[quandle.table[np.ix_(reps_array, reps_array)]]
    return Quandle(table, name=f"inn({quandle.name})"), inn_map
