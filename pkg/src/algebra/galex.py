import os
import sys
from typing import Tuple, Union

import numpy as np
from loguru import logger
from sympy.combinatorics import Permutation

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../..")))

from src.config import settings
from src.structure import (
    Covering,
    ExtensionClass,
    ExtensionKind,
    FiberAction,
    FiniteGroup,
    GalexReconstruction,
    GroupAutomorphism,
    Quandle,
    Subgroup,
    TangleColorError,
)
from src.algebra.utils.table import first_witness, is_permutation
from src.algebra.group import (
    automorphism_from_images,
    fix_subgroup,
    is_abelian,
    right_cosets,
    subgroup_as_group,
)
from src.algebra.perm_group import (
    centralizer,
    derived_subgroup,
    elements,
    group_from_perm_group,
)
from src.algebra.quandle import (
    fiber,
    inn_image_quandle,
    inner_group,
    is_connected,
    is_isomorphism,
    quandle_isomorphic,
    require_connected,
)


def galex(group: FiniteGroup, f: GroupAutomorphism, name: str = "") -> Quandle:
    """
    GAlex(G,f): the quandle on G with x*y = f(xy⁻¹)y.
    """
    table = group.table
    quotient = table[:, group.inverse]
    return Quandle(
        table[f.images[quotient], np.arange(group.order)[None, :]],
        name=name or f"GAlex({group.name},{f.name or 'f'})",
    )


def _require_fixed(group: FiniteGroup, f: GroupAutomorphism, subgroup: Subgroup) -> None:
    for h in subgroup.elements:
        if f(h) != h:
            error = f"f({h + 1})={f(h) + 1} in {group.name}"
            logger.error(error)
            raise TangleColorError("NotFixed", error)


def homogeneous_quandle(
    group: FiniteGroup, subgroup: Subgroup, f: GroupAutomorphism, name: str = ""
) -> Tuple[Quandle, np.ndarray]:
    """
    The homogeneous quandle on right cosets, Ha*Hb = Hf(ab⁻¹)b.

    Cosets are labeled in ascending order of their smallest element.

    Args:
        group (FiniteGroup): G.
        subgroup (Subgroup): H, a subgroup of Fix(G,f).
        f (GroupAutomorphism): The automorphism.
        name (str, optional): The quandle name.

    Returns:
        Tuple[Quandle, np.ndarray]: The quandle and coset_of[g] for g in G.

    Raises:
        TangleColorError: NotFixed if some h in H is moved by f.
    """
    _require_fixed(group, f, subgroup)
    cosets, coset_of = right_cosets(group, subgroup)
    reps = np.array([coset[0] for coset in cosets], dtype=np.int64)
    table = group.table
    quotient = table[np.ix_(reps, group.inverse[reps])]
    products = table[f.images[quotient], reps[None, :]]
    return (
        Quandle(coset_of[products], name=name or f"H({group.name},{subgroup.order})"),
        coset_of,
    )


def fiber_action_p_lambda(
    group: FiniteGroup, subgroup: Subgroup, total: Quandle
) -> FiberAction:
    """Λ acting on GAlex(G,f) by left multiplication."""
    coefficient = subgroup_as_group(subgroup, name=f"Fix({group.name})")
    members = np.array(subgroup.elements, dtype=np.int64)
    return FiberAction(coefficient, total, group.table[members, :])


def covering_p_lambda(
    group: FiniteGroup, f: GroupAutomorphism, subgroup: Subgroup
) -> Covering:
    """
    The covering g -> Λg of GAlex(G,f) onto the homogeneous quandle of Λ.

    The returned covering carries the left-multiplication action of Λ.

    Raises:
        TangleColorError: NotFixed, or InvalidCocycle if the map fails the
            covering check.
    """
    total = galex(group, f)
    base, coset_of = homogeneous_quandle(group, subgroup, f)
    ok, error = is_covering(coset_of, total, base)
    if not ok:
        logger.error(error)
        raise TangleColorError("InvalidCocycle", error)
    action = fiber_action_p_lambda(group, subgroup, total)
    return Covering(total, base, coset_of, action=action)


def is_covering(map, total: Quandle, base: Quandle) -> Tuple[bool, str]:
    """
    Check that map is a surjective homomorphism with p(x) = p(y) ⇒ a*x = a*y.

    Returns:
        Tuple[bool, str]: Result and the first violation, 1-based.
    """
    map = np.asarray(map, dtype=np.int64)
    if map.shape != (total.order,) or map.min() < 0 or map.max() >= base.order:
        return False, "BadMap"

    missing = np.setdiff1d(np.arange(base.order), map)
    if missing.size:
        return False, f"NotSurjective({missing[0] + 1})"

    witness = first_witness(map[total.table] != base.table[np.ix_(map, map)])
    if witness is not None:
        x, y = witness
        return False, f"NotHomomorphism({x + 1},{y + 1})"

    for q in range(base.order):
        members = np.flatnonzero(map == q)
        columns = total.table[:, members]
        witness = first_witness(columns != columns[:, [0]])
        if witness is not None:
            return False, f"NotCovering({members[0] + 1},{members[witness[1]] + 1})"

    return True, ""


def validate_fiber_action(covering: Covering, action: FiberAction) -> None:
    """
    Check that the action is by deck transformations, free and fiber-transitive.

    Raises:
        TangleColorError: ActionNotDeck, ActionNotFree or
            ActionNotTransitiveOnFiber with a 1-based witness.
    """
    total = covering.total
    table = action.table
    lam_table = action.group.table
    ids = np.arange(total.order)

    def fail(kind: str, error: str) -> None:
        logger.error(error)
        raise TangleColorError(kind, error)

    if table.shape != (action.group.order, total.order):
        fail("ActionNotDeck", "action table shape does not match")
    if not np.array_equal(table[0], ids):
        fail("ActionNotDeck", "identity of Λ does not act trivially")

    for lam in range(action.group.order):
        row = table[lam]
        if not is_permutation(row):
            fail("ActionNotDeck", f"λ={lam + 1} is not a bijection")
        moved = first_witness(covering.map[row] != covering.map)
        if moved is not None:
            fail("ActionNotDeck", f"λ={lam + 1} leaves the fiber of {moved[0] + 1}")
        # λ(x*y) = λ(x)*y
        witness = first_witness(row[total.table] != total.table[row, :])
        if witness is not None:
            x, y = witness
            fail("ActionNotDeck", f"λ={lam + 1} does not commute with R_{y + 1} at {x + 1}")
        for mu in range(action.group.order):
            composed = table[lam][table[mu]]
            if not np.array_equal(composed, table[lam_table[lam, mu]]):
                fail("ActionNotDeck", f"λ={lam + 1}, μ={mu + 1} break the action law")
        if lam:
            fixed = first_witness(row == ids)
            if fixed is not None:
                fail("ActionNotFree", f"λ={lam + 1} fixes {fixed[0] + 1}")

    for q in range(covering.base.order):
        members = covering.fiber_over(q)
        reached = set(table[:, members[0]].tolist())
        if reached != set(members):
            fail("ActionNotTransitiveOnFiber", f"fiber over {q + 1}")


def classify_extension(
    group: FiniteGroup, f: GroupAutomorphism, quandle: Union[Quandle, None] = None
) -> ExtensionClass:
    """
    Tell whether GAlex(G,f) is faithful, an abelian or a non-abelian extension.

    Raises:
        TangleColorError: NotConnected.
    """
    quandle = galex(group, f) if quandle is None else quandle
    require_connected(quandle)
    fixed = fix_subgroup(group, f)
    if fixed.order == 1:
        return ExtensionClass(ExtensionKind.FAITHFUL, fixed)
    if is_abelian(fixed):
        return ExtensionClass(ExtensionKind.ABELIAN, fixed)
    return ExtensionClass(ExtensionKind.NONABELIAN, fixed)


def inn_equivalence_check(group: FiniteGroup, f: GroupAutomorphism) -> Tuple[bool, str]:
    """
    Check that R_g -> Fix·g is a well defined isomorphism inn(Q) -> H(G,Fix,f).

    Returns:
        Tuple[bool, str]: Result and the failing pair or law, 1-based.
    """
    quandle = galex(group, f)
    fixed = fix_subgroup(group, f)
    base, coset_of = homogeneous_quandle(group, fixed, f)
    image, inn_map = inn_image_quandle(quandle)

    tau = np.full(image.order, -1, dtype=np.int64)
    first = np.full(image.order, -1, dtype=np.int64)
    for g in range(group.order):
        k = inn_map[g]
        if tau[k] < 0:
            tau[k] = coset_of[g]
            first[k] = g
        elif tau[k] != coset_of[g]:
            return False, f"NotWellDefined({first[k] + 1},{g + 1})"

    return is_isomorphism(image, base, tau)


def centralizer_fiber_bijection(
    quandle: Quandle, e: int, bound: Union[int, None] = None
) -> Tuple[bool, str]:
    """
    Check that g -> e·g maps C(R_e) ∩ Inn(Q)′ bijectively onto F_e.

    Returns:
        Tuple[bool, str]: Result and the failure.
    """
    inner = inner_group(quandle)
    group = inner.perm_group
    cent = centralizer(group, inner.translation(e), bound)
    derived = set(elements(derived_subgroup(group, bound), bound))
    images = [g[e] for g in cent.elements if g in derived]

    expected = set(fiber(quandle, e).elements)
    if len(set(images)) != len(images):
        return False, "NotInjective"
    if set(images) != expected:
        return False, f"ImageMismatch({len(images)} vs {len(expected)})"
    return True, ""


def galex_criterion(
    quandle: Quandle,
    bound: Union[int, None] = None,
    iso_bound: Union[int, None] = None,
) -> Tuple[Union[GalexReconstruction, None], str]:
    """
    Decide whether a connected quandle is a GAlex quandle.

    The test is |Q| = |Inn(Q)′|. On success G = Inn(Q)′ and
    f(g) = R_e⁻¹ g R_e with e the first element, and g -> e·g is checked to
    be an isomorphism GAlex(G,f) -> Q. Up to the isomorphism search bound
    the generic search runs as well.

    Returns:
        Tuple[Union[GalexReconstruction, None], str]: The reconstruction,
            or None and the reason.

    Raises:
        TangleColorError: NotConnected, OrderOverflow.
    """
    iso_bound = settings.max_iso_order if iso_bound is None else iso_bound
    require_connected(quandle)
    inner = inner_group(quandle)
    derived = derived_subgroup(inner.perm_group, bound)
    if derived.order != quandle.order:
        return None, f"DerivedOrderMismatch(|Inn'|={derived.order},|Q|={quandle.order})"

    group, listing = group_from_perm_group(derived, name=f"Inn({quandle.name})'")
    index = {p: i for i, p in enumerate(listing)}
    r_e = Permutation(list(inner.translation(0)))
    images = [index[tuple((~r_e * Permutation(list(g)) * r_e).array_form)] for g in listing]
    f, error = automorphism_from_images(group, images, name="conj(R_1)")
    if f is None:
        return None, f"conjugation by R_1 is not an automorphism: {error}"

    element_map = [g[0] for g in listing]
    ok, error = is_isomorphism(galex(group, f), quandle, element_map)
    if not ok:
        return None, f"reconstruction failed: {error}"

    witness = None
    if quandle.order <= iso_bound:
        _, witness = quandle_isomorphic(galex(group, f), quandle, iso_bound)
    logger.debug(f"{quandle.name}: GAlex reconstruction over |G|={group.order}")
    return GalexReconstruction(group, f, element_map, witness), ""
