from typing import Dict, List

from .braid import BraidWord
from .covering import Cocycle
from .errors import TangleColorError
from .group import FiniteGroup, GroupAutomorphism
from .perm_group import PermGroup
from .quandle import Quandle


class RecordSet:
    """
    The records of one text file, each kind in file order.

    Attributes:
        path (str): The source file.
        groups (list[FiniteGroup]): `group` records.
        perm_groups (list[PermGroup]): `permgroup` records.
        automorphisms (list[GroupAutomorphism]): `auto` records.
        quandles (list[Quandle]): `quandle` records.
        knots (list[BraidWord]): `knot` records.
        cocycles (list[Cocycle]): `cocycle` records.
        comments (dict[str, list[str]]): Comment lines directly above a record.
    """

    def __init__(self, path: str = "") -> None:
        self.path = path
        self.groups: List[FiniteGroup] = []
        self.perm_groups: List[PermGroup] = []
        self.automorphisms: List[GroupAutomorphism] = []
        self.quandles: List[Quandle] = []
        self.knots: List[BraidWord] = []
        self.cocycles: List[Cocycle] = []
        self.comments: Dict[str, List[str]] = {}

    def find(self, kind: str, name: str = None):
        """
        Look up a record by kind and name; without a name, the first one.

        Raises:
            TangleColorError: MissingRecord.
        """
        records = getattr(self, kind)
        for record in records:
            if name is None or record.name == name:
                return record
        label = kind.rstrip("s").replace("_", "")
        wanted = f"{label} {name}" if name else f"a {label} record"
        raise TangleColorError("MissingRecord", f"{self.path}: no {wanted}")
