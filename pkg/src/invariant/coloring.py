import os
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import List, Sequence, Tuple, Union

from loguru import logger

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../..")))

from src.structure import BraidWord, Cocycle, Quandle, Tangle
from src.algebra.quandle import is_connected

BRANCH = "branch"
DEAD = "dead"
END = "end"


def propagate(quandle: Quandle, braid: BraidWord, top: Sequence[int]) -> Tuple[int, ...]:
    """
    Push colors from the top of a braid to the bottom.

    At +i the colors (a, c) at positions (i, i+1) become (c, a*c); at -i they
    become (c′, a) with c′*a = c.

    Args:
        quandle (Quandle): The coloring quandle.
        braid (BraidWord): The braid.
        top (Sequence[int]): One 0-based color per strand.

    Returns:
        Tuple[int, ...]: The bottom colors.
    """
    colors = list(top)
    rows, div = quandle.rows, quandle.div_rows
    for w in braid.letters:
        i = abs(w) - 1
        a, c = colors[i], colors[i + 1]
        if w > 0:
            colors[i], colors[i + 1] = c, rows[a][c]
        else:
            colors[i], colors[i + 1] = div[c][a], a
    return tuple(colors)


class ColoringSearch:
    """
    Lazy backtracking over the colorings of a braid closure or 1-tangle.

    Strand colors are chosen only when a crossing first needs them, and the
    closure constraint bottom[p] = top[p] is checked right after the last
    crossing at position p. With a cocycle every coloring also carries the
    product of its crossing weights, in crossing order.

    Attributes:
        quandle (Quandle): The coloring quandle.
        braid (BraidWord): The braid.
        cocycle (Cocycle | None): Optional crossing weights.
        workers (int): Processes used for the first branching level.
    """

    def __init__(
        self,
        quandle: Quandle,
        braid: BraidWord,
        cocycle: Union[Cocycle, None] = None,
        workers: int = 1,
    ) -> None:
        self.quandle = quandle
        self.braid = braid
        self.cocycle = cocycle
        self.workers = max(1, workers)

        self._letters = [(abs(w) - 1, w > 0) for w in braid.letters]
        self._last = [-1] * braid.strands
        for k, (i, _) in enumerate(self._letters):
            self._last[i] = k
            self._last[i + 1] = k
        self._close_open = False

        if cocycle is not None:
            self._phi = cocycle.table.tolist()
            self._lam = cocycle.coefficient.rows
            self._lam_inv = cocycle.coefficient.inverse.tolist()

    def run(self, top: int, close_open_strand: bool = False) -> Counter:
        """
        Count colorings with the open strand starting at color top.

        Args:
            top (int): Color of the top arc of strand 1.
            close_open_strand (bool, optional): Also require bottom = top on
                strand 1, i.e. count closure colorings. Defaults to False.

        Returns:
            Counter: (bottom color of strand 1, weight) -> number of colorings.
        """
        self._close_open = close_open_strand
        n = self.braid.strands
        cur = [-1] * n
        tops = [-1] * n
        tops[0] = top
        out: Counter = Counter()

        status, k, p, weight = self._advance(0, cur, tops, 0)
        if status == DEAD:
            return out
        if status == END:
            out[(cur[0], weight)] += 1
            return out

        branches = []
        for c in range(self.quandle.order):
            cur2, tops2 = list(cur), list(tops)
            cur2[p] = tops2[p] = c
            branches.append((k, cur2, tops2, weight))

        logger.debug(
            f"{self.braid.name}/{self.quandle.name}: {len(branches)} first-level branches"
        )
        if self.workers == 1:
            for branch in branches:
                self._descend(*branch, out)
            return out

        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            for partial in executor.map(_search_branch, [self] * len(branches), branches):
                out.update(partial)
        return out

    def _advance(self, k: int, cur: List[int], tops: List[int], weight: int):
        rows, div = self.quandle.rows, self.quandle.div_rows
        weighted = self.cocycle is not None
        while k < len(self._letters):
            i, positive = self._letters[k]
            for p in (i, i + 1):
                if cur[p] < 0:
                    if tops[p] < 0:
                        return BRANCH, k, p, weight
                    cur[p] = tops[p]

            a, c = cur[i], cur[i + 1]
            if positive:
                cur[i], cur[i + 1] = c, rows[a][c]
                if weighted:
                    weight = self._lam[weight][self._phi[a][c]]
            else:
                source = div[c][a]
                cur[i], cur[i + 1] = source, a
                if weighted:
                    weight = self._lam[weight][self._lam_inv[self._phi[source][a]]]

            for p in (i, i + 1):
                if self._last[p] == k and (p or self._close_open) and cur[p] != tops[p]:
                    return DEAD, k, p, weight
            k += 1

        for p in range(len(cur)):
            if cur[p] < 0:
                if tops[p] < 0:
                    return BRANCH, k, p, weight
                cur[p] = tops[p]
        return END, k, -1, weight

    def _descend(self, k: int, cur: List[int], tops: List[int], weight: int, out: Counter) -> None:
        status, k, p, weight = self._advance(k, cur, tops, weight)
        if status == DEAD:
            return
        if status == END:
            out[(cur[0], weight)] += 1
            return
        for c in range(self.quandle.order):
            cur2, tops2 = list(cur), list(tops)
            cur2[p] = tops2[p] = c
            self._descend(k, cur2, tops2, weight, out)


def _search_branch(search: ColoringSearch, branch: tuple) -> Counter:
    out: Counter = Counter()
    search._descend(*branch, out)
    return out


def tangle_colorings(
    quandle: Quandle, tangle: Union[Tangle, BraidWord], top: int, workers: int = 1
) -> Counter:
    """
    Colorings of the 1-tangle with the top arc colored top.

    Returns:
        Counter: bottom color of the open strand -> number of colorings.
    """
    braid = tangle.braid if isinstance(tangle, Tangle) else tangle
    counts = ColoringSearch(quandle, braid, workers=workers).run(top)
    result: Counter = Counter()
    for (bottom, _), count in counts.items():
        result[bottom] += count
    return result


def count_colorings_closure(
    quandle: Quandle, braid: BraidWord, workers: int = 1
) -> int:
    """
    Col_Q(K), the number of colorings of the closed braid.

    For connected Q this is |Q| times the count with strand 1 colored 0.
    """
    search = ColoringSearch(quandle, braid, workers=workers)
    if is_connected(quandle):
        return quandle.order * sum(search.run(0, close_open_strand=True).values())
    return sum(
        sum(search.run(e, close_open_strand=True).values())
        for e in range(quandle.order)
    )
