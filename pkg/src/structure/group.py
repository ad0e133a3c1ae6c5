import numpy as np
from typing import Union


def freeze(table: np.ndarray) -> np.ndarray:
    """
    Return an int64 copy of the array that can no longer be written to.

    Args:
        table (np.ndarray): Any integer array.

    Returns:
        np.ndarray: The read-only copy.
    """
    frozen = np.array(table, dtype=np.int64, copy=True)
    frozen.flags.writeable = False
    return frozen


class FiniteGroup:
    """
    Represents a finite group given by its Cayley table.

    Elements are the indices 0..order-1 and index 0 is always the identity
    (label 1 in files). Instances are produced by validate_group and are
    immutable afterwards.

    Attributes:
        name (str): The record name.
        order (int): The number of elements.
        table (np.ndarray): order x order array, table[a][b] = a·b.
        identity (int): Always 0.
        inverse (np.ndarray): inverse[a] = a⁻¹.
        rows (list[list[int]]): The table as nested lists for tight loops.
    """

    def __init__(self, table: np.ndarray, name: str = "") -> None:
        self.name = name
        self.table = freeze(table)
        self.order = int(self.table.shape[0])
        self.identity = 0
        self.inverse = freeze(np.argmax(self.table == 0, axis=1))
        self.rows = self.table.tolist()

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def renamed(self, name: str) -> "FiniteGroup":
        return FiniteGroup(self.table, name=name)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and np.array_equal(
            self.table, other.table
        )

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


class GroupAutomorphism:
    """
    Represents an automorphism f of a FiniteGroup.

    Attributes:
        group (FiniteGroup): The group acted on.
        images (np.ndarray): images[a] = f(a).
        name (str): The record name.
    """

    def __init__(self, group: FiniteGroup, images: np.ndarray, name: str = "") -> None:
        self.group = group
        self.images = freeze(images)
        self.name = name

    def __call__(self, a: int) -> int:
        return int(self.images[a])

    def renamed(self, name: str) -> "GroupAutomorphism":
        return GroupAutomorphism(self.group, self.images, name=name)

    def key(self) -> tuple:
        return tuple(self.images.tolist())

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupAutomorphism) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"GroupAutomorphism({self.name!r}, {self.key()})"


class Subgroup:
    """
    Represents a subgroup of a FiniteGroup or of a PermGroup.

    For a FiniteGroup parent the elements are sorted indices, so the identity
    comes first. For a PermGroup parent they are sorted image tuples.

    Attributes:
        parent (Union[FiniteGroup, PermGroup]): The ambient group.
        elements (tuple): Sorted elements.
    """

    def __init__(self, parent, elements) -> None:
        self.parent = parent
        self.elements = tuple(sorted(elements))
        self._members = frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, item: Union[int, tuple]) -> bool:
        return item in self._members

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order})"
