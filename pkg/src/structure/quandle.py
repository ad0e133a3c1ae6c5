import numpy as np

from .group import freeze
from .perm_group import PermGroup


class Quandle:
    """
    Represents a finite quandle by its operation table.

    table[i][j] = i*j on 0-based indices, so column j is the right
    translation R_j. Instances come out of validate_quandle (or a
    constructor that is known to satisfy the axioms) and are immutable.

    Attributes:
        name (str): The record name.
        order (int): The number of elements.
        table (np.ndarray): order x order array of i*j.
        left_div (np.ndarray): left_div[c][b] = the unique a with a*b = c.
        rows (list[list[int]]): table as nested lists.
        div_rows (list[list[int]]): left_div as nested lists.
    """

    def __init__(self, table: np.ndarray, name: str = "") -> None:
        self.name = name
        self.table = freeze(table)
        self.order = int(self.table.shape[0])
        n = self.order
        left_div = np.empty((n, n), dtype=np.int64)
        rows = np.repeat(np.arange(n), n).reshape(n, n)
        cols = np.tile(np.arange(n), n).reshape(n, n)
        left_div[self.table, cols] = rows
        self.left_div = freeze(left_div)
        self.rows = self.table.tolist()
        self.div_rows = self.left_div.tolist()

    def op(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def column(self, b: int) -> tuple:
        return tuple(self.table[:, b].tolist())

    def renamed(self, name: str) -> "Quandle":
        return Quandle(self.table, name=name)

    def __eq__(self, other) -> bool:
        return isinstance(other, Quandle) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def __repr__(self) -> str:
        return f"Quandle({self.name!r}, order={self.order})"


class InnerGroup:
    """
    Represents Inn(Q), the permutation group generated by the columns of Q.

    Attributes:
        quandle (Quandle): The quandle.
        perm_group (PermGroup): Generated by the distinct columns, in order
            of first appearance.
        inn_map (np.ndarray): inn_map[a] = index of R_a among the generators.
    """

    def __init__(self, quandle: Quandle, perm_group: PermGroup, inn_map) -> None:
        self.quandle = quandle
        self.perm_group = perm_group
        self.inn_map = freeze(inn_map)

    def translation(self, a: int) -> tuple:
        return self.perm_group.generators[int(self.inn_map[a])]


class Fiber:
    """
    Represents F_e, the elements sharing the right translation of e.

    Attributes:
        base (int): The base element e.
        elements (tuple[int, ...]): e first, then the rest in ascending order.
    """

    def __init__(self, base: int, elements) -> None:
        self.base = base
        rest = sorted(b for b in elements if b != base)
        self.elements = (base, *rest)
        self._positions = {b: i for i, b in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return len(self.elements)

    def position(self, b: int) -> int:
        return self._positions[b]

    def __contains__(self, b: int) -> bool:
        return b in self._positions

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"Fiber(base={self.base}, elements={self.elements})"
