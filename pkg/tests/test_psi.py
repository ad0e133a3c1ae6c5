import os
import sys
import unittest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.structure import TangleColorError
from src.algebra.galex import galex
from src.algebra.quandle import dihedral_quandle, fiber
from src.knot.braid import connected_sum, mirror, reverse, reverse_mirror, stabilize
from src.invariant.coloring import count_colorings_closure
from src.invariant.psi import col_with_ends, psi
from tests.helpers import FIGURE_EIGHT, KNOTS, TREFOIL, UNKNOT, r3, sl23_galex


def sl23_quandle():
    group, f = sl23_galex()
    return galex(group, f)


class PsiTest(unittest.TestCase):
    """Test class for the tangle coloring vector"""

    def test_unknot(self):
        for quandle in (r3(), dihedral_quandle(5), sl23_quandle()):
            vector = psi(quandle, 0, UNKNOT)
            self.assertEqual(vector.counts, (1,) + (0,) * (len(vector.counts) - 1))

    def test_r3_trefoil(self):
        vector = psi(r3(), 0, TREFOIL)
        self.assertEqual(vector.counts, (3,))
        self.assertEqual(vector.fiber, (0,))
        self.assertEqual(vector.format(), "3")

    def test_sl23_trefoil_is_chiral(self):
        quandle = sl23_quandle()
        vector = psi(quandle, 0, TREFOIL)
        self.assertEqual(vector.fiber, fiber(quandle, 0).elements)
        self.assertEqual(vector.counts[0], 1)
        self.assertEqual(sorted(vector.counts), [0, 0, 1, 4])

        mirrored = psi(quandle, 0, mirror(TREFOIL))
        self.assertEqual(mirrored.counts[0], 1)
        self.assertEqual(sorted(mirrored.counts), [0, 0, 1, 4])
        self.assertNotEqual(mirrored.counts.index(4), vector.counts.index(4))
        self.assertNotEqual(mirrored, vector)

        self.assertEqual(psi(quandle, 0, reverse(TREFOIL)), vector)
        self.assertEqual(psi(quandle, 0, reverse_mirror(TREFOIL)), mirrored)

    def test_count_at_base_matches_closure_count(self):
        for quandle in (r3(), dihedral_quandle(5), sl23_quandle()):
            for braid in KNOTS:
                vector = psi(quandle, 0, braid)
                self.assertEqual(
                    vector.counts[0] * quandle.order, count_colorings_closure(quandle, braid)
                )

    def test_total_does_not_depend_on_base(self):
        quandle = sl23_quandle()
        for braid in (TREFOIL, FIGURE_EIGHT):
            totals = {psi(quandle, e, braid).total for e in range(quandle.order)}
            self.assertEqual(len(totals), 1)

    def test_stabilization(self):
        quandle = sl23_quandle()
        for braid in (TREFOIL, FIGURE_EIGHT):
            vector = psi(quandle, 0, braid)
            self.assertEqual(psi(quandle, 0, stabilize(braid)), vector)
            self.assertEqual(psi(quandle, 0, stabilize(braid, sign=-1)), vector)

    def test_connected_sum_factorization(self):
        for quandle in (r3(), sl23_quandle()):
            e = 0
            direct = count_colorings_closure(quandle, connected_sum(TREFOIL, TREFOIL))
            factored = quandle.order * sum(
                col_with_ends(quandle, TREFOIL, e, a) * col_with_ends(quandle, TREFOIL, a, e)
                for a in range(quandle.order)
            )
            self.assertEqual(direct, factored)
        self.assertEqual(count_colorings_closure(r3(), connected_sum(TREFOIL, TREFOIL)), 27)

    def test_workers(self):
        quandle = sl23_quandle()
        self.assertEqual(psi(quandle, 0, FIGURE_EIGHT, workers=2), psi(quandle, 0, FIGURE_EIGHT))

    def test_requires_connected(self):
        with self.assertRaises(TangleColorError) as ctx:
            psi(dihedral_quandle(4), 0, TREFOIL)
        self.assertEqual(ctx.exception.kind, "NotConnected")


if __name__ == "__main__":
    unittest.main()
