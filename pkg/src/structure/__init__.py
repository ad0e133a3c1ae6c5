from .errors import TangleColorError
from .group import FiniteGroup, GroupAutomorphism, Subgroup
from .perm_group import PermGroup
from .quandle import Quandle, InnerGroup, Fiber
from .covering import (
    Covering,
    FiberAction,
    Cocycle,
    ExtensionQuandle,
    ExtensionKind,
    ExtensionClass,
    GalexReconstruction,
)
from .braid import BraidWord, Tangle
from .invariant import PsiVector, GroupRingElement, SymmetryReport, SYMMETRIES
from .command import Command
from .sweep import SweepJob
from .records import RecordSet
