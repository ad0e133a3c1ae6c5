import os
import sys
from typing import Iterator, List, Tuple, Union

import numpy as np
from loguru import logger

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../../..")))

from src.data.processer.interface import Interface
from src.data.utils.field import (
    format_labels,
    parse_count,
    parse_labels,
    parse_permutation,
)
from src.structure import (
    BraidWord,
    Cocycle,
    FiniteGroup,
    GroupAutomorphism,
    PermGroup,
    Quandle,
    RecordSet,
    TangleColorError,
)
from src.algebra.group import automorphism_from_images, validate_group
from src.algebra.perm_group import validate_perm_group
from src.algebra.quandle import validate_quandle
from src.algebra.cocycle import validate_cocycle
from src.knot.braid import format_braid, validate_braid

KEYWORDS = ("group", "permgroup", "auto", "quandle", "knot", "cocycle")


class _Lines:
    """Cursor over the meaningful lines of a file, keeping comments aside."""

    def __init__(self, text: str) -> None:
        self.items: List[Tuple[int, List[str], List[str]]] = []
        comments: List[str] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            body, _, comment = raw.partition("#")
            tokens = body.split()
            if not tokens:
                if comment.strip():
                    comments.append(comment.strip())
                continue
            self.items.append((number, tokens, comments))
            comments = []
        self.position = 0

    def __iter__(self) -> Iterator:
        return self

    def __next__(self):
        if self.position >= len(self.items):
            raise StopIteration
        item = self.items[self.position]
        self.position += 1
        return item

    def peek(self) -> Union[List[str], None]:
        if self.position >= len(self.items):
            return None
        return self.items[self.position][1]


def parse_records(text: str, path: str = "<text>") -> RecordSet:
    """
    Parse a line-oriented record file.

    A `cocycle` record uses the nearest preceding `quandle` record as its base
    and the nearest preceding `group` record as its coefficient group; an
    `auto` record belongs to the nearest preceding `group` record.

    Args:
        text (str): The file contents.
        path (str, optional): Used in diagnostics.

    Returns:
        RecordSet: The validated records.

    Raises:
        TangleColorError: ParseError naming file, record and violation.
    """
    records = RecordSet(path)
    lines = _Lines(text)

    def fail(name: str, violation: str):
        error = f"{path}: record {name}: {violation}"
        logger.error(error)
        raise TangleColorError("ParseError", error)

    def read_rows(name: str, n: int, width: int, labels: int) -> np.ndarray:
        rows = []
        for _ in range(n):
            if lines.peek() is None or lines.peek()[0] in KEYWORDS:
                fail(name, f"expected {n} rows, got {len(rows)}")
            number, tokens, _ = next(lines)
            row = parse_labels(tokens, width)
            if row is None or min(row) < 0 or max(row) >= labels:
                fail(name, f"bad row at line {number}")
            rows.append(row)
        return np.array(rows, dtype=np.int64).reshape(n, width)

    for number, tokens, comments in lines:
        keyword = tokens[0]
        name = tokens[1] if len(tokens) > 1 else f"line {number}"
        if comments:
            records.comments[name] = comments

        if keyword == "group" or keyword == "quandle":
            n = parse_count(tokens[2]) if len(tokens) == 3 else None
            if n is None:
                fail(name, f"bad header at line {number}")
            table = read_rows(name, n, n, n)
            if keyword == "group":
                group, error = validate_group(table, name=name)
                if group is None:
                    fail(name, error)
                records.groups.append(group)
            else:
                quandle, error = validate_quandle(table, name=name)
                if quandle is None:
                    fail(name, error)
                records.quandles.append(quandle)

        elif keyword == "permgroup":
            degree = parse_count(tokens[2]) if len(tokens) == 3 else None
            if degree is None:
                fail(name, f"bad header at line {number}")
            generators = []
            while lines.peek() is not None and lines.peek()[0] == "gen":
                gen_number, gen_tokens, _ = next(lines)
                images = parse_permutation(" ".join(gen_tokens[1:]), degree)
                if images is None:
                    fail(name, f"bad generator at line {gen_number}")
                generators.append(images)
            group, error = validate_perm_group(degree, generators, name=name)
            if group is None:
                fail(name, error)
            records.perm_groups.append(group)

        elif keyword == "auto":
            if not records.groups:
                fail(name, "no preceding group record")
            group = records.groups[-1]
            if lines.peek() is None:
                fail(name, "missing images")
            img_number, img_tokens, _ = next(lines)
            images = parse_labels(img_tokens, group.order)
            if images is None:
                fail(name, f"bad images at line {img_number}")
            auto, error = automorphism_from_images(group, images, name=name)
            if auto is None:
                fail(name, error)
            records.automorphisms.append(auto)

        elif keyword == "knot":
            try:
                strands, length = int(tokens[2]), int(tokens[3])
                letters = [int(t) for t in tokens[4:]]
            except (IndexError, ValueError):
                fail(name, f"bad knot record at line {number}")
            if length != len(letters):
                fail(name, f"LengthMismatch({length} vs {len(letters)})")
            braid, error = validate_braid(strands, letters, name=name)
            if braid is None:
                fail(name, error)
            records.knots.append(braid)

        elif keyword == "cocycle":
            if not records.quandles or not records.groups:
                fail(name, "needs a preceding quandle and group record")
            base, coefficient = records.quandles[-1], records.groups[-1]
            sizes = [parse_count(t) for t in tokens[2:4]] if len(tokens) == 4 else []
            if sizes != [base.order, coefficient.order]:
                fail(name, f"OrderMismatch(expected {base.order} {coefficient.order})")
            table = read_rows(name, base.order, base.order, coefficient.order)
            section = None
            if lines.peek() is not None and lines.peek()[0] == "section":
                sec_number, sec_tokens, _ = next(lines)
                section = parse_labels(sec_tokens[1:], base.order)
                if section is None:
                    fail(name, f"bad section at line {sec_number}")
            cocycle = Cocycle(base, coefficient, table, section=section, name=name)
            ok, error = validate_cocycle(cocycle)
            if not ok:
                fail(name, error)
            records.cocycles.append(cocycle)

        else:
            fail(name, f"unknown record kind {keyword!r} at line {number}")

    return records


def format_comments(comments: List[str]) -> List[str]:
    return [f"# {c}" for c in comments]


def format_group(group: FiniteGroup) -> List[str]:
    return [f"group {group.name} {group.order}"] + [
        format_labels(row) for row in group.rows
    ]


def format_automorphism(auto: GroupAutomorphism) -> List[str]:
    return [f"auto {auto.name or 'f'}", format_labels(auto.images)]


def format_perm_group(group: PermGroup) -> List[str]:
    return [f"permgroup {group.name} {group.degree}"] + [
        f"gen {format_labels(g)}" for g in group.generators
    ]


def format_quandle(quandle: Quandle, comments: List[str] = None) -> List[str]:
    return (
        format_comments(comments or [])
        + [f"quandle {quandle.name} {quandle.order}"]
        + [format_labels(row) for row in quandle.rows]
    )


def format_knot(braid: BraidWord) -> List[str]:
    return [format_braid(braid)]


def format_cocycle(cocycle: Cocycle) -> List[str]:
    lines = [
        f"cocycle {cocycle.name} {cocycle.base.order} {cocycle.coefficient.order}"
    ] + [format_labels(row) for row in cocycle.table.tolist()]
    if cocycle.section is not None:
        lines.append(f"section {format_labels(cocycle.section)}")
    return lines


class TextFile(Interface):
    """
    Reads and writes the line-oriented record files.
    """

    async def load_records(self, path: str) -> RecordSet:
        try:
            with open(path, "r") as handle:
                text = handle.read()
        except OSError as e:
            error = f"TextFile::load_records: Failed to read {path} {e}"
            logger.error(error)
            raise TangleColorError("FileError", error)
        return parse_records(text, path)

    async def load_directory(self, path: str, suffix: str = ".qnd") -> List[RecordSet]:
        try:
            names = sorted(n for n in os.listdir(path) if n.endswith(suffix))
        except OSError as e:
            error = f"TextFile::load_directory: Failed to list {path} {e}"
            logger.error(error)
            raise TangleColorError("FileError", error)
        return [await self.load_records(os.path.join(path, n)) for n in names]

    async def save_lines(self, path: Union[str, None], lines: List[str]):
        if path is None:
            return
        try:
            directory = os.path.dirname(path)
            if directory and not os.path.exists(directory):
                os.makedirs(directory)
            with open(path, "w") as handle:
                handle.write("\n".join(lines) + "\n")
        except OSError as e:
            error = f"TextFile::save_lines: Failed to write {path} {e}"
            logger.error(error)
            raise TangleColorError("FileError", error)
