import os
import sys
from typing import List, Sequence, Tuple, Union

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../..")))

from src.structure import BraidWord


def strand_permutation(strands: int, letters: Sequence[int]) -> Tuple[int, ...]:
    """
    Where each strand ends up: perm[top position] = bottom position.

    Args:
        strands (int): The number of strands.
        letters (Sequence[int]): The braid word.

    Returns:
        Tuple[int, ...]: The 0-based permutation.
    """
    at = list(range(strands))
    for w in letters:
        i = abs(w) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    perm = [0] * strands
    for position, strand in enumerate(at):
        perm[strand] = position
    return tuple(perm)


def cycle_count(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
    return cycles


def validate_braid(
    strands: int, letters: Sequence[int], name: str = ""
) -> Tuple[Union[BraidWord, None], str]:
    """
    Validate letter bounds and that the closure has a single component.

    Returns:
        Tuple[Union[BraidWord, None], str]: The braid, or None and the error.
    """
    if strands < 1:
        return None, f"BadStrands({strands})"
    for w in letters:
        if w == 0 or abs(w) > strands - 1:
            return None, f"BadLetter({w})"
    cycles = cycle_count(strand_permutation(strands, letters))
    if cycles != 1:
        return None, f"NotAKnot(components={cycles})"
    return BraidWord(strands, letters, name=name), ""


def parse_braid(text: str) -> Tuple[Union[BraidWord, None], str]:
    """
    Parse `knot <name> <n> <k> <w1 ... wk>`.

    Returns:
        Tuple[Union[BraidWord, None], str]: The braid, or None and the error.
    """
    tokens = text.split("#", 1)[0].split()
    if len(tokens) < 4 or tokens[0] != "knot":
        return None, "BadRecord"
    name = tokens[1]
    try:
        strands = int(tokens[2])
        length = int(tokens[3])
        letters = [int(t) for t in tokens[4:]]
    except ValueError:
        return None, "BadRecord"
    if length != len(letters):
        return None, f"LengthMismatch({length} vs {len(letters)})"
    return validate_braid(strands, letters, name=name)


def parse_inline_braid(text: str, name: str = "braid") -> Tuple[Union[BraidWord, None], str]:
    """Parse the `<n> <k> <w1 ... wk>` tail given on the command line."""
    return parse_braid(f"knot {name} {text}")


def format_braid(braid: BraidWord) -> str:
    letters = " ".join(str(w) for w in braid.letters)
    line = f"knot {braid.name or 'K'} {braid.strands} {len(braid.letters)}"
    return f"{line} {letters}" if letters else line


def mirror(braid: BraidWord) -> BraidWord:
    return braid.with_letters([-w for w in braid.letters])


def reverse(braid: BraidWord) -> BraidWord:
    """Rotate the diagram by π in its plane: reversed word, i -> n-i, signs kept."""
    n = braid.strands
    return braid.with_letters(
        [(n - abs(w)) * (1 if w > 0 else -1) for w in reversed(braid.letters)]
    )


def reverse_mirror(braid: BraidWord) -> BraidWord:
    return reverse(mirror(braid))


SYMMETRY_TRANSFORMS = {"m": mirror, "r": reverse, "rm": reverse_mirror}


def inverse_word(braid: BraidWord) -> BraidWord:
    """The letter-wise inverse word, read backwards."""
    return braid.with_letters([-w for w in reversed(braid.letters)])


def connected_sum(first: BraidWord, second: BraidWord) -> BraidWord:
    """
    Join two knots along the last strand of the first braid.

    The second word is shifted up by m-1 generators, giving m+n-1 strands.
    """
    shift = first.strands - 1
    letters: List[int] = list(first.letters) + [
        w + shift if w > 0 else w - shift for w in second.letters
    ]
    return BraidWord(
        first.strands + second.strands - 1,
        letters,
        name=f"{first.name}+{second.name}",
    )


def stabilize(braid: BraidWord, sign: int = 1) -> BraidWord:
    """Markov stabilization: add a strand and the letter ±n."""
    n = braid.strands
    return braid.with_letters(list(braid.letters) + [sign * n], strands=n + 1)
