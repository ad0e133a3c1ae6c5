class BraidWord:
    """
    Represents a braid word on n strands whose closure is a knot.

    Letter +i is the positive crossing between positions i and i+1
    (1-based generator numbering), -i the negative one.

    Attributes:
        name (str): The knot name.
        strands (int): The number of strands n.
        letters (tuple[int, ...]): The word.
    """

    def __init__(self, strands: int, letters, name: str = "") -> None:
        self.name = name
        self.strands = strands
        self.letters = tuple(int(w) for w in letters)

    def with_letters(self, letters, strands: int = None, name: str = None) -> "BraidWord":
        return BraidWord(
            self.strands if strands is None else strands,
            letters,
            name=self.name if name is None else name,
        )

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BraidWord)
            and self.strands == other.strands
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash((self.strands, self.letters))

    def __repr__(self) -> str:
        return f"BraidWord({self.name!r}, {self.strands}, {list(self.letters)})"


class Tangle:
    """
    The 1-tangle obtained by cutting the closure of a braid open on strand 1.

    Attributes:
        braid (BraidWord): The braid.
        open_strand (int): Always 0, the first position.
    """

    def __init__(self, braid: BraidWord) -> None:
        self.braid = braid
        self.open_strand = 0

    @property
    def strands(self) -> int:
        return self.braid.strands
