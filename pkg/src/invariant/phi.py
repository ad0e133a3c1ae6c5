import os
import sys

from loguru import logger

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../..")))

from src.structure import (
    BraidWord,
    Cocycle,
    ExtensionQuandle,
    GroupRingElement,
    PsiVector,
    Quandle,
    TangleColorError,
)
from src.algebra.cocycle import validate_cocycle
from src.algebra.group import is_abelian
from src.algebra.quandle import fiber
from src.invariant.coloring import ColoringSearch


def phi_state_sum(
    base: Quandle, cocycle: Cocycle, braid: BraidWord, workers: int = 1
) -> GroupRingElement:
    """
    Φ_φ(K) = Σ over closure colorings of the product of crossing weights.

    Raises:
        TangleColorError: InvalidCocycle, NonAbelianCoefficients.
    """
    if cocycle.base != base:
        error = f"cocycle {cocycle.name} is not defined on {base.name}"
        logger.error(error)
        raise TangleColorError("InvalidCocycle", error)
    ok, error = validate_cocycle(cocycle)
    if not ok:
        logger.error(error)
        raise TangleColorError("InvalidCocycle", error)
    if not is_abelian(cocycle.coefficient):
        error = f"state sum needs abelian coefficients, {cocycle.coefficient.name} is not"
        logger.error(error)
        raise TangleColorError("NonAbelianCoefficients", error)

    search = ColoringSearch(base, braid, cocycle=cocycle, workers=workers)
    coeffs = [0] * cocycle.coefficient.order
    for x in range(base.order):
        for (_, weight), count in search.run(x, close_open_strand=True).items():
            coeffs[weight] += count
    return GroupRingElement(cocycle.coefficient, coeffs)


def conjugate(element: GroupRingElement) -> GroupRingElement:
    """Σ n_λ λ⁻¹."""
    coeffs = [0] * element.group.order
    for lam, count in enumerate(element.coeffs):
        coeffs[element.group.inv(lam)] += count
    return GroupRingElement(element.group, coeffs)


def phi_from_psi(vector: PsiVector, extension: ExtensionQuandle) -> GroupRingElement:
    """
    |X| times Ψ^e of Λ×_φX, read on Λ through (λ, x₀) -> λ₀⁻¹λ where e = (λ₀, x₀).

    Raises:
        TangleColorError: ProjectionNotInnEquivalent when F_e is not the
            projection fiber of e.
    """
    quandle = extension.quandle
    lam0, x0 = extension.element(vector.base)
    expected = {extension.index(lam, x0) for lam in range(extension.coefficient_order)}
    if set(fiber(quandle, vector.base).elements) != expected:
        error = f"{quandle.name}: fiber of {vector.base + 1} is not the projection fiber"
        logger.error(error)
        raise TangleColorError("ProjectionNotInnEquivalent", error)

    group = extension.cocycle.coefficient
    shift = group.inv(lam0)
    coeffs = [0] * group.order
    for b, count in zip(vector.fiber, vector.counts):
        lam, _ = extension.element(b)
        coeffs[group.mul(shift, lam)] += extension.cocycle.base.order * count
    return GroupRingElement(group, coeffs)
