import os
import sys
from typing import Sequence, Tuple, Union

from loguru import logger

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../..")))

from src.structure import (
    SYMMETRIES,
    BraidWord,
    PsiVector,
    Quandle,
    SymmetryReport,
    TangleColorError,
)
from src.algebra.quandle import end_permutation_p
from src.knot.braid import SYMMETRY_TRANSFORMS
from src.invariant.psi import psi


def symmetry_report(
    quandle: Quandle,
    e: int,
    braid: BraidWord,
    symmetries: Sequence[str] = SYMMETRIES,
    workers: int = 1,
) -> SymmetryReport:
    """
    Ψ of K and of its images under the requested symmetries.

    When rm is requested, Ψ(rm K) is checked against Ψ(K) transported by the
    end permutation p.

    Raises:
        TangleColorError: NotConnected, EndArcViolation, PermutationLawViolation.
    """
    requested = [s for s in SYMMETRIES if s in symmetries]
    base = psi(quandle, e, braid, workers=workers)
    images = {
        s: psi(quandle, e, SYMMETRY_TRANSFORMS[s](braid), workers=workers)
        for s in requested
    }

    if "rm" in images:
        p = end_permutation_p(quandle, e)
        if images["rm"] != base.permuted(p):
            error = (
                f"{braid.name}/{quandle.name}: psi_rm={images['rm'].format()} "
                f"is not psi={base.format()} permuted by p={p}"
            )
            logger.error(error)
            raise TangleColorError("PermutationLawViolation", error)

    distinguishes = tuple(s for s in requested if images[s] != base)
    return SymmetryReport(braid.name, quandle.name, base, images, distinguishes)


def symmetry_type(report: SymmetryReport) -> str:
    """
    Name the symmetry class the vectors prove, if any.

    Equal vectors never prove a symmetry, so the names for two separated
    symmetries end with "?": the knot has the remaining one or is chiral.
    """
    if set(report.images) != set(SYMMETRIES):
        return "undetected"
    left = [s for s in SYMMETRIES if s not in report.distinguishes]
    if not left:
        return "chiral"
    if len(left) == 1:
        return {
            "r": "reversible?",
            "rm": "negative amphicheiral?",
            "m": "positive amphicheiral?",
        }[left[0]]
    return "undetected"


def format_report_line(report: SymmetryReport) -> str:
    fields = [report.knot, report.quandle, f"psi={report.psi.format()}"]
    for s in SYMMETRIES:
        vector = report.images.get(s)
        fields.append(f"psi_{s}={vector.format() if vector else '-'}")
    fields.append(f"distinguishes={','.join(report.distinguishes) or '-'}")
    return "\t".join(fields)


def _parse_counts(text: str) -> Union[Tuple[int, ...], None]:
    if text == "-":
        return None
    return tuple(int(c) for c in text.split(","))


def parse_report_line(line: str) -> Tuple[Union[SymmetryReport, None], str]:
    """
    Parse a line written by format_report_line.

    Fiber elements are not part of the line, so the vectors come back over
    positions 0..s-1.

    Returns:
        Tuple[Union[SymmetryReport, None], str]: The report or None and the error.
    """
    fields = line.rstrip("\n").split("\t")
    keys = ["psi", "psi_m", "psi_r", "psi_rm", "distinguishes"]
    if len(fields) != 7:
        return None, "BadReportLine"
    values = {}
    for key, field in zip(keys, fields[2:]):
        prefix = f"{key}="
        if not field.startswith(prefix):
            return None, f"BadReportField({key})"
        values[key] = field[len(prefix):]

    knot, quandle = fields[0], fields[1]
    try:
        counts = _parse_counts(values["psi"])
        images = {}
        for s in SYMMETRIES:
            parsed = _parse_counts(values[f"psi_{s}"])
            if parsed is not None:
                images[s] = parsed
    except ValueError:
        return None, "BadCounts"
    if counts is None:
        return None, "BadCounts"

    positions = tuple(range(len(counts)))

    def vector(c):
        return PsiVector(quandle, 0, positions, c)

    distinguishes = values["distinguishes"]
    return (
        SymmetryReport(
            knot,
            quandle,
            vector(counts),
            {s: vector(c) for s, c in images.items()},
            () if distinguishes == "-" else tuple(distinguishes.split(",")),
        ),
        "",
    )
