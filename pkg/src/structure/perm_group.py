from sympy.combinatorics import Permutation, PermutationGroup


class PermGroup:
    """
    Represents a permutation group given by generators.

    Points are 0..degree-1. Order, membership, stabilizers and the rest are
    answered by the Schreier-Sims machinery of sympy, built lazily.

    Attributes:
        name (str): The record name.
        degree (int): The number of points acted on.
        generators (tuple[tuple[int, ...], ...]): Generators as image tuples.
    """

    def __init__(self, degree: int, generators, name: str = "") -> None:
        self.name = name
        self.degree = degree
        gens = tuple(tuple(int(x) for x in g) for g in generators)
        if not gens:
            gens = (tuple(range(degree)),)
        self.generators = gens
        self._group = None

    @classmethod
    def from_sympy(cls, group: PermutationGroup, name: str = "") -> "PermGroup":
        perm_group = cls(
            group.degree, [g.array_form for g in group.generators], name=name
        )
        perm_group._group = group
        return perm_group

    @property
    def sympy_group(self) -> PermutationGroup:
        if self._group is None:
            self._group = PermutationGroup(
                [Permutation(list(g)) for g in self.generators]
            )
        return self._group

    @property
    def order(self) -> int:
        return int(self.sympy_group.order())

    def __repr__(self) -> str:
        return f"PermGroup({self.name!r}, degree={self.degree})"
