from typing import List, Tuple, Union


class SweepJob:
    """
    Represents a quandle x knot sweep.

    Attributes:
        quandle_files (list[str]): Quandle files, in sweep order.
        knot_file (str): The braid file.
        base (int): The base point label (1-based). Defaults to 1.
        symmetries (tuple[str, ...]): Subset of m, r, rm to compare against.
        out (str | None): Output path; None prints to stdout.
        workers (int): Process count, at least 1.
    """

    def __init__(
        self,
        quandle_files: List[str],
        knot_file: str,
        base: int = 1,
        symmetries: Tuple[str, ...] = ("m", "r", "rm"),
        out: Union[str, None] = None,
        workers: int = 1,
    ) -> None:
        self.quandle_files = list(quandle_files)
        self.knot_file = knot_file
        self.base = base
        self.symmetries = tuple(symmetries)
        self.out = out
        self.workers = workers
