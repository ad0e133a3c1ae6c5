from typing import Dict, Tuple

from .group import FiniteGroup

SYMMETRIES = ("m", "r", "rm")


class PsiVector:
    """
    Represents Ψ^e_Q(K): tangle coloring counts indexed by the fiber F_e.

    Attributes:
        quandle (str): The quandle name.
        base (int): The base point e (0-based).
        fiber (tuple[int, ...]): Fiber elements, e first.
        counts (tuple[int, ...]): counts[i] = colorings ending at fiber[i].
    """

    def __init__(self, quandle: str, base: int, fiber, counts) -> None:
        self.quandle = quandle
        self.base = base
        self.fiber = tuple(fiber)
        self.counts = tuple(int(c) for c in counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def permuted(self, p) -> "PsiVector":
        """
        Transport the counts along a permutation of fiber positions.

        Args:
            p (Sequence[int]): p[i] = new position of the count at position i.

        Returns:
            PsiVector: The permuted vector over the same fiber.
        """
        counts = [0] * len(self.counts)
        for i, c in enumerate(self.counts):
            counts[p[i]] = c
        return PsiVector(self.quandle, self.base, self.fiber, counts)

    def format(self) -> str:
        return ",".join(str(c) for c in self.counts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PsiVector)
            and self.fiber == other.fiber
            and self.counts == other.counts
        )

    def __hash__(self) -> int:
        return hash((self.fiber, self.counts))

    def __repr__(self) -> str:
        return f"PsiVector({self.quandle!r}, base={self.base}, counts={list(self.counts)})"


class GroupRingElement:
    """
    Represents Σ n_λ λ in the integral group ring of a finite group.

    Attributes:
        group (FiniteGroup): The coefficient group Λ.
        coeffs (tuple[int, ...]): coeffs[λ] = n_λ.
    """

    def __init__(self, group: FiniteGroup, coeffs) -> None:
        self.group = group
        self.coeffs = tuple(int(c) for c in coeffs)

    @classmethod
    def zero(cls, group: FiniteGroup) -> "GroupRingElement":
        return cls(group, [0] * group.order)

    def support(self) -> Dict[int, int]:
        return {lam: c for lam, c in enumerate(self.coeffs) if c}

    def format(self) -> str:
        terms = [f"{c}*{lam + 1}" for lam, c in self.support().items()]
        return " + ".join(terms) if terms else "0"

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupRingElement) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"GroupRingElement({self.format()})"


class SymmetryReport:
    """
    Ψ of a knot and of its symmetric images under one quandle and base point.

    Attributes:
        knot (str): The knot name.
        quandle (str): The quandle name.
        psi (PsiVector): Ψ(K).
        images (dict[str, PsiVector]): Ψ(s(K)) for the computed symmetries.
        distinguishes (tuple[str, ...]): The symmetries s with Ψ(s(K)) ≠ Ψ(K),
            in m, r, rm order.
    """

    def __init__(
        self,
        knot: str,
        quandle: str,
        psi: PsiVector,
        images: Dict[str, PsiVector],
        distinguishes: Tuple[str, ...],
    ) -> None:
        self.knot = knot
        self.quandle = quandle
        self.psi = psi
        self.images = dict(images)
        self.distinguishes = tuple(distinguishes)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymmetryReport)
            and (self.knot, self.quandle, self.distinguishes)
            == (other.knot, other.quandle, other.distinguishes)
            and self.psi.counts == other.psi.counts
            and {s: v.counts for s, v in self.images.items()}
            == {s: v.counts for s, v in other.images.items()}
        )

    def __repr__(self) -> str:
        return f"SymmetryReport({self.knot!r}, {self.quandle!r}, {self.distinguishes})"
