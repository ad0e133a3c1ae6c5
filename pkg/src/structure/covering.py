from enum import Enum
from typing import Union

import numpy as np

from .group import FiniteGroup, GroupAutomorphism, Subgroup, freeze
from .quandle import Quandle


class Covering:
    """
    Represents a covering map from a total quandle onto a base quandle.

    Attributes:
        total (Quandle): The covering quandle.
        base (Quandle): The covered quandle.
        map (np.ndarray): map[x] = image of x in the base.
        action (FiberAction | None): The deck group action, when the
            covering was built together with one.
    """

    def __init__(self, total: Quandle, base: Quandle, map, action=None) -> None:
        self.total = total
        self.base = base
        self.map = freeze(map)
        self.action = action

    def fiber_over(self, q: int) -> tuple:
        return tuple(np.flatnonzero(self.map == q).tolist())


class FiberAction:
    """
    Represents a coefficient group acting on the total quandle of a covering.

    Attributes:
        group (FiniteGroup): The coefficient group Λ.
        total (Quandle): The quandle acted on.
        table (np.ndarray): |Λ| x |total| array, table[λ][x] = λ·x.
    """

    def __init__(self, group: FiniteGroup, total: Quandle, table) -> None:
        self.group = group
        self.total = total
        self.table = freeze(table)


class Cocycle:
    """
    Represents a quandle 2-cocycle with values in a possibly non-abelian group.

    Attributes:
        base (Quandle): The quandle X.
        coefficient (FiniteGroup): The group Λ.
        table (np.ndarray): |X| x |X| array, table[a][b] = φ(a,b).
        section (tuple | None): The section used to extract the cocycle,
            as indices of the total quandle, when known.
        name (str): The record name.
    """

    def __init__(
        self,
        base: Quandle,
        coefficient: FiniteGroup,
        table,
        section=None,
        name: str = "",
    ) -> None:
        self.base = base
        self.coefficient = coefficient
        self.table = freeze(table)
        self.section = None if section is None else tuple(int(s) for s in section)
        self.name = name

    def rebased(self, base: Quandle, coefficient: FiniteGroup) -> "Cocycle":
        """The same table over renamed copies of X and Λ."""
        return Cocycle(base, coefficient, self.table, section=self.section, name=self.name)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Cocycle)
            and np.array_equal(self.table, other.table)
            and self.section == other.section
        )

    def __hash__(self) -> int:
        return hash(self.table.tobytes())


class ExtensionQuandle:
    """
    Represents Λ×_φX. Element (λ, x) is stored at index x·|Λ| + λ.

    Attributes:
        cocycle (Cocycle): The defining cocycle.
        quandle (Quandle): The extension as a plain quandle.
    """

    def __init__(self, cocycle: Cocycle, quandle: Quandle) -> None:
        self.cocycle = cocycle
        self.quandle = quandle

    @property
    def coefficient_order(self) -> int:
        return self.cocycle.coefficient.order

    def index(self, lam: int, x: int) -> int:
        return x * self.coefficient_order + lam

    def element(self, index: int) -> tuple:
        return index % self.coefficient_order, index // self.coefficient_order

    def projection(self) -> np.ndarray:
        return np.arange(self.quandle.order) // self.coefficient_order


class ExtensionKind(Enum):
    FAITHFUL = "faithful"
    ABELIAN = "abelian_extension"
    NONABELIAN = "nonabelian_extension"


class ExtensionClass:
    """
    The verdict of classify_extension for GAlex(G,f).

    Attributes:
        kind (ExtensionKind): Faithful, abelian or non-abelian extension.
        coefficient (Subgroup): Λ = Fix(G,f).
    """

    def __init__(self, kind: ExtensionKind, coefficient: Subgroup) -> None:
        self.kind = kind
        self.coefficient = coefficient

    def __str__(self) -> str:
        if self.kind is ExtensionKind.FAITHFUL:
            return self.kind.value
        return f"{self.kind.value}(|Λ|={self.coefficient.order})"


class GalexReconstruction:
    """
    Reconstruction data returned when a quandle passes the GAlex criterion.

    Attributes:
        group (FiniteGroup): G = Inn(Q)′ as a Cayley table.
        automorphism (GroupAutomorphism): f(g) = R_e⁻¹ g R_e.
        element_map (tuple[int, ...]): element_map[g] = quandle element e·g,
            an isomorphism GAlex(G,f) -> Q.
        isomorphism (Union[tuple, None]): A witness from quandle_isomorphic,
            when the generic check ran.
    """

    def __init__(
        self,
        group: FiniteGroup,
        automorphism: GroupAutomorphism,
        element_map,
        isomorphism: Union[tuple, None] = None,
    ) -> None:
        self.group = group
        self.automorphism = automorphism
        self.element_map = tuple(int(x) for x in element_map)
        self.isomorphism = isomorphism
