import os
import sys
import unittest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.structure import BraidWord
from src.knot.braid import (
    connected_sum,
    cycle_count,
    format_braid,
    inverse_word,
    mirror,
    parse_braid,
    parse_inline_braid,
    reverse,
    reverse_mirror,
    stabilize,
    strand_permutation,
    validate_braid,
)
from tests.helpers import FIGURE_EIGHT, KNOTS, TREFOIL


class BraidTest(unittest.TestCase):
    """Test class for braid records and knot symmetries"""

    def test_parse_trefoil(self):
        braid, error = parse_braid("knot 3_1 2 3 1 1 1")
        self.assertEqual(error, "")
        self.assertEqual(braid, TREFOIL)
        self.assertEqual(braid.name, "3_1")
        self.assertEqual(format_braid(braid), "knot 3_1 2 3 1 1 1")

    def test_parse_with_comment(self):
        braid, error = parse_braid("knot 4_1 3 4 1 -2 1 -2  # figure eight")
        self.assertEqual(error, "")
        self.assertEqual(braid, FIGURE_EIGHT)

    def test_parse_errors(self):
        self.assertEqual(parse_braid("knot 3_1 2"), (None, "BadRecord"))
        self.assertEqual(parse_braid("link 3_1 2 3 1 1 1"), (None, "BadRecord"))
        self.assertEqual(parse_braid("knot 3_1 2 x 1 1 1"), (None, "BadRecord"))
        self.assertEqual(parse_braid("knot 3_1 2 3 1 1"), (None, "LengthMismatch(3 vs 2)"))
        self.assertEqual(parse_braid("knot k 2 1 2"), (None, "BadLetter(2)"))
        self.assertEqual(parse_braid("knot k 2 1 0"), (None, "BadLetter(0)"))
        self.assertEqual(parse_braid("knot hopf 2 2 1 1"), (None, "NotAKnot(components=2)"))
        self.assertEqual(validate_braid(0, []), (None, "BadStrands(0)"))

    def test_inline(self):
        braid, error = parse_inline_braid("2 3 1 1 1")
        self.assertEqual(error, "")
        self.assertEqual(braid, TREFOIL)
        self.assertEqual(braid.name, "braid")

    def test_unknot_format(self):
        self.assertEqual(format_braid(BraidWord(1, [], name="unknot")), "knot unknot 1 0")

    def test_strand_permutation(self):
        self.assertEqual(strand_permutation(3, [1, 2]), (2, 0, 1))
        self.assertEqual(cycle_count((2, 0, 1)), 1)
        self.assertEqual(cycle_count((0, 1, 2)), 3)

    def test_symmetries(self):
        braid = BraidWord(3, [1, -2, 1, 1], name="K")
        self.assertEqual(mirror(braid).letters, (-1, 2, -1, -1))
        self.assertEqual(reverse(braid).letters, (2, 2, -1, 2))
        self.assertEqual(reverse_mirror(braid).letters, (-2, -2, 1, -2))
        self.assertEqual(reverse(braid).name, "K")

    def test_symmetries_are_involutions(self):
        for braid in KNOTS:
            self.assertEqual(mirror(mirror(braid)), braid)
            self.assertEqual(reverse(reverse(braid)), braid)
            self.assertEqual(reverse_mirror(reverse_mirror(braid)), braid)

    def test_symmetric_images_stay_knots(self):
        for braid in KNOTS:
            for image in (mirror(braid), reverse(braid), reverse_mirror(braid)):
                _, error = validate_braid(image.strands, image.letters)
                self.assertEqual(error, "")

    def test_inverse_word(self):
        self.assertEqual(inverse_word(BraidWord(3, [1, -2])).letters, (2, -1))

    def test_connected_sum(self):
        braid = connected_sum(TREFOIL, TREFOIL)
        self.assertEqual(braid.strands, 3)
        self.assertEqual(braid.letters, (1, 1, 1, 2, 2, 2))
        self.assertEqual(braid.name, "3_1+3_1")
        self.assertEqual(validate_braid(braid.strands, braid.letters)[1], "")

        braid = connected_sum(TREFOIL, FIGURE_EIGHT)
        self.assertEqual(braid.strands, 4)
        self.assertEqual(braid.letters, (1, 1, 1, 2, -3, 2, -3))

    def test_stabilize(self):
        self.assertEqual(stabilize(TREFOIL), BraidWord(3, [1, 1, 1, 2]))
        self.assertEqual(stabilize(TREFOIL, sign=-1), BraidWord(3, [1, 1, 1, -2]))


if __name__ == "__main__":
    unittest.main()
