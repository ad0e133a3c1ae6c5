import os
import sys
import random
import unittest

import numpy as np

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.structure import GroupAutomorphism, TangleColorError
from src.algebra.group import cyclic_group
from src.algebra.galex import galex
from src.algebra.quandle import (
    conj_quandle,
    dihedral_quandle,
    end_permutation_p,
    fiber,
    fiber_sizes,
    inn_image_quandle,
    is_connected,
    is_faithful,
    is_isomorphism,
    orbits,
    pair_orbit_classes,
    quandle_isomorphic,
    require_connected,
    star_inv,
    transversal,
    trivial_quandle,
    validate_quandle,
)
from tests.helpers import r3, relabel, sl23_galex, symmetric_group, unit_automorphism


class ValidateQuandleTest(unittest.TestCase):
    """Test class for quandle table validation"""

    def test_r3(self):
        quandle, error = validate_quandle([[0, 2, 1], [2, 1, 0], [1, 0, 2]])
        self.assertEqual(error, "")
        self.assertEqual(quandle, r3())

    def test_star_inv(self):
        quandle = dihedral_quandle(5)
        for a in range(5):
            for b in range(5):
                self.assertEqual(star_inv(quandle, quandle.op(a, b), b), a)

    def test_violations(self):
        _, error = validate_quandle([[1, 0], [0, 1]])
        self.assertEqual(error, "NotIdempotent(1)")
        _, error = validate_quandle([[0, 0], [0, 1]])
        self.assertEqual(error, "ColumnNotBijective(1)")
        _, error = validate_quandle([[0, 2, 0], [2, 1, 1], [1, 0, 2]])
        self.assertTrue(error.startswith("NotDistributive("))
        _, error = validate_quandle([[0, 1]])
        self.assertEqual(error, "BadShape")

    def test_fuzz_single_corruptions(self):
        rng = random.Random(7)
        bases = [dihedral_quandle(3), dihedral_quandle(5), dihedral_quandle(7), trivial_quandle(3)]
        bases.append(galex(cyclic_group(5), unit_automorphism(5, 2)))
        for _ in range(1000):
            base = rng.choice(bases)
            table = base.table.copy()
            a, b = rng.randrange(base.order), rng.randrange(base.order)
            table[a][b] = rng.choice([v for v in range(base.order) if v != table[a][b]])
            quandle, error = validate_quandle(table)
            self.assertIsNone(quandle)
            self.assertNotEqual(error, "")


class QuandleStructureTest(unittest.TestCase):
    """Test class for orbits, fibers and the end permutation"""

    def test_connected_and_faithful(self):
        self.assertTrue(is_connected(r3()))
        self.assertTrue(is_faithful(r3()))
        self.assertFalse(is_connected(trivial_quandle(2)))
        self.assertFalse(is_faithful(trivial_quandle(2)))
        self.assertEqual(orbits(dihedral_quandle(4)), [[0, 2], [1, 3]])

    def test_galex_of_negation_is_disconnected(self):
        group = cyclic_group(4)
        quandle = galex(group, GroupAutomorphism(group, [0, 3, 2, 1]))
        self.assertEqual(quandle, dihedral_quandle(4))
        self.assertFalse(is_connected(quandle))
        with self.assertRaises(TangleColorError) as ctx:
            require_connected(quandle)
        self.assertEqual(ctx.exception.kind, "NotConnected")

    def test_fibers_of_sl23_galex(self):
        group, f = sl23_galex()
        quandle = galex(group, f)
        self.assertEqual(fiber(quandle, 0).size, 4)
        self.assertEqual(fiber(quandle, 0).elements[0], 0)
        self.assertEqual(fiber_sizes(quandle), [4] * 6)
        self.assertFalse(is_faithful(quandle))

    def test_right_translations_are_automorphisms(self):
        group, f = sl23_galex()
        for quandle in (r3(), dihedral_quandle(5), galex(group, f)):
            for a in range(quandle.order):
                ok, error = is_isomorphism(quandle, quandle, quandle.table[:, a])
                self.assertTrue(ok, error)

    def test_transversal(self):
        group, f = sl23_galex()
        quandle = galex(group, f)
        paths = transversal(quandle, 0)
        self.assertEqual(len(paths), quandle.order)
        for x, t in paths.items():
            self.assertEqual(t[0], x)
            ok, _ = is_isomorphism(quandle, quandle, t)
            self.assertTrue(ok)

    def test_end_permutation(self):
        self.assertEqual(end_permutation_p(r3(), 0), (0,))
        self.assertEqual(pair_orbit_classes(r3(), 0), [(0,)])

        group, f = sl23_galex()
        quandle = galex(group, f)
        p = end_permutation_p(quandle, 0)
        self.assertEqual(len(p), 4)
        self.assertEqual(p[0], 0)
        self.assertEqual(sorted(p), [0, 1, 2, 3])
        for j in range(4):
            self.assertEqual(p[p[j]], j)

    def test_end_permutation_needs_connected(self):
        with self.assertRaises(TangleColorError) as ctx:
            end_permutation_p(dihedral_quandle(4), 0)
        self.assertEqual(ctx.exception.kind, "NotConnected")

    def test_inn_image(self):
        group, f = sl23_galex()
        image, inn_map = inn_image_quandle(galex(group, f))
        self.assertEqual(image.order, 6)
        self.assertEqual(len(inn_map), 24)
        self.assertTrue(is_connected(image))


class IsomorphismTest(unittest.TestCase):
    """Test class for quandle isomorphism decisions"""

    def test_relabelled_copy(self):
        quandle = dihedral_quandle(5)
        perm = [3, 0, 4, 1, 2]
        other, _ = validate_quandle(relabel(quandle, perm))
        ok, witness = quandle_isomorphic(quandle, other)
        self.assertTrue(ok)
        self.assertTrue(is_isomorphism(quandle, other, witness)[0])
        self.assertTrue(is_isomorphism(quandle, other, perm)[0])

    def test_alexander_quandles_with_different_multipliers(self):
        group = cyclic_group(5)
        first = galex(group, unit_automorphism(5, 2))
        second = galex(group, unit_automorphism(5, 3))
        self.assertEqual(quandle_isomorphic(first, second), (False, None))

    def test_order_mismatch(self):
        self.assertEqual(quandle_isomorphic(r3(), dihedral_quandle(5)), (False, None))
        self.assertEqual(is_isomorphism(r3(), dihedral_quandle(5), [0, 1, 2]), (False, "OrderMismatch"))
        self.assertEqual(is_isomorphism(r3(), r3(), [0, 0, 2]), (False, "NotBijective"))

    def test_too_large(self):
        with self.assertRaises(TangleColorError) as ctx:
            quandle_isomorphic(dihedral_quandle(25), dihedral_quandle(25))
        self.assertEqual(ctx.exception.kind, "TooLarge")

    def test_conjugation_quandles(self):
        quandle, members = conj_quandle(symmetric_group(3), (1, 0, 2))
        self.assertEqual(quandle.order, 3)
        self.assertEqual(members[0], (1, 0, 2))
        self.assertTrue(quandle_isomorphic(quandle, r3())[0])

        quandle, _ = conj_quandle(symmetric_group(4), (1, 0, 2, 3))
        self.assertEqual(quandle.order, 6)
        self.assertTrue(is_connected(quandle))
        self.assertTrue(np.array_equal(np.diag(quandle.table), np.arange(6)))


if __name__ == "__main__":
    unittest.main()
