"""Shared fixtures and brute-force oracles for the test suites."""

import os
import sys
import itertools
from collections import Counter, deque
from functools import lru_cache

import numpy as np
from sympy.combinatorics.named_groups import AlternatingGroup, SymmetricGroup

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.structure import BraidWord, GroupAutomorphism, PermGroup
from src.algebra.group import cyclic_group, fix_subgroup, group_from_elements
from src.algebra.perm_group import group_from_perm_group
from src.algebra.quandle import dihedral_quandle
from src.algebra.galex import covering_p_lambda
from src.algebra.cocycle import extension_quandle, extract_cocycle
from src.invariant.coloring import propagate

FIXTURES = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "fixtures"))

TREFOIL = BraidWord(2, [1, 1, 1], name="3_1")
FIGURE_EIGHT = BraidWord(3, [1, -2, 1, -2], name="4_1")
UNKNOT = BraidWord(1, [], name="unknot")
CINQUEFOIL = BraidWord(2, [1, 1, 1, 1, 1], name="5_1")
THREE_TWIST = BraidWord(3, [1, 1, 1, 2, -1, 2], name="5_2")
KNOTS = (UNKNOT, TREFOIL, FIGURE_EIGHT, CINQUEFOIL, THREE_TWIST)


def r3():
    return dihedral_quandle(3, name="R3")


def unit_automorphism(n: int, k: int) -> GroupAutomorphism:
    group = cyclic_group(n)
    return GroupAutomorphism(group, (np.arange(n) * k) % n, name=f"x{k}")


def _mat_mul(a, b):
    return (
        (a[0] * b[0] + a[1] * b[2]) % 3,
        (a[0] * b[1] + a[1] * b[3]) % 3,
        (a[2] * b[0] + a[3] * b[2]) % 3,
        (a[2] * b[1] + a[3] * b[3]) % 3,
    )


SL23_IDENTITY = (1, 0, 0, 1)


def _sl23_elements():
    matrices = [
        m
        for m in itertools.product(range(3), repeat=4)
        if (m[0] * m[3] - m[1] * m[2]) % 3 == 1 and m != SL23_IDENTITY
    ]
    return [SL23_IDENTITY] + sorted(matrices)


@lru_cache(maxsize=None)
def sl23():
    """SL(2,3) from 2x2 matrices over F3, identity first."""
    return group_from_elements(_sl23_elements(), _mat_mul, name="SL23")


def sl23_conjugation(matrix, name: str) -> GroupAutomorphism:
    """g -> AgA⁻¹ on SL(2,3) for A in GL(2,3), matrices as (a, b, c, d)."""
    elements = _sl23_elements()
    index = {m: i for i, m in enumerate(elements)}
    inverse = next(
        m for m in itertools.product(range(3), repeat=4) if _mat_mul(matrix, m) == SL23_IDENTITY
    )
    images = [index[_mat_mul(_mat_mul(matrix, g), inverse)] for g in elements]
    return GroupAutomorphism(sl23(), images, name=name)


@lru_cache(maxsize=None)
def sl23_galex():
    """Conjugation by [[0,1],[1,1]], of order 8 in GL(2,3): |Fix| = 4, GAlex connected."""
    return sl23(), sl23_conjugation((0, 1, 1, 1), "f4")


@lru_cache(maxsize=None)
def sl23_involution():
    """Conjugation by diag(1,2): Fix = {I, -I}, GAlex connected."""
    return sl23(), sl23_conjugation((1, 0, 0, 2), "f2")


@lru_cache(maxsize=None)
def sl23_extension():
    """Λ×_φX for the cocycle of GAlex(SL(2,3), f4) over its fixed subgroup."""
    group, f = sl23_galex()
    covering = covering_p_lambda(group, f, fix_subgroup(group, f))
    return extension_quandle(extract_cocycle(covering))


@lru_cache(maxsize=None)
def a5():
    """A5 as a Cayley table, with its elements as image tuples."""
    return group_from_perm_group(PermGroup.from_sympy(AlternatingGroup(5), name="A5"))


@lru_cache(maxsize=None)
def a5_transposition_conjugation():
    """f(g) = (1 2) g (1 2) on A5."""
    group, listing = a5()
    index = {p: i for i, p in enumerate(listing)}
    t = np.array([1, 0, 2, 3, 4])
    images = [index[tuple(t[np.array(g)[t]].tolist())] for g in listing]
    return group, GroupAutomorphism(group, images, name="conj12")


def symmetric_group(n: int) -> PermGroup:
    return PermGroup.from_sympy(SymmetricGroup(n), name=f"S{n}")


def brute_force_closure_count(quandle, braid) -> int:
    """Count top tuples fixed by propagation."""
    return sum(
        1
        for top in itertools.product(range(quandle.order), repeat=braid.strands)
        if propagate(quandle, braid, top) == top
    )


def brute_force_tangle(quandle, braid, e) -> Counter:
    """Bottom colors of strand 1 over all tangle colorings with top arc e."""
    result = Counter()
    for rest in itertools.product(range(quandle.order), repeat=braid.strands - 1):
        top = (e,) + rest
        bottom = propagate(quandle, braid, top)
        if bottom[1:] == top[1:]:
            result[bottom[0]] += 1
    return result


def brute_force_closure(generators) -> set:
    """Close permutation image tuples under composition."""
    gens = [tuple(g) for g in generators]
    identity = tuple(range(len(gens[0])))
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(g[i] for i in x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def relabel(quandle, perm):
    """The quandle transported along perm: new table[perm[a]][perm[b]] = perm[a*b]."""
    perm = np.asarray(perm)
    table = np.empty_like(quandle.table)
    table[np.ix_(perm, perm)] = perm[quandle.table]
    return table
