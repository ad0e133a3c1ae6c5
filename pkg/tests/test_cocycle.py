import os
import sys
import asyncio
import unittest

import numpy as np

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.structure import Cocycle, Covering, TangleColorError
from src.algebra.group import cyclic_group, fix_subgroup, is_abelian
from src.algebra.galex import covering_p_lambda, is_covering
from src.algebra.cocycle import (
    default_section,
    extension_isomorphism,
    extension_quandle,
    extract_cocycle,
    trivial_cocycle,
    validate_cocycle,
)
from src.algebra.quandle import is_isomorphism
from src.data.processer.textfile import TextFile
from tests.helpers import FIXTURES, a5_transposition_conjugation, r3, sl23_galex, unit_automorphism


class CocycleTest(unittest.TestCase):
    """Test class for cocycle extraction and extension quandles"""

    def assertRoundTrip(self, group, f):
        covering = covering_p_lambda(group, f, fix_subgroup(group, f))
        cocycle = extract_cocycle(covering)
        self.assertEqual(validate_cocycle(cocycle), (True, ""))
        self.assertEqual(cocycle.section, default_section(covering))

        extension = extension_quandle(cocycle)
        self.assertEqual(extension.quandle.order, group.order)
        self.assertEqual(
            is_covering(extension.projection(), extension.quandle, covering.base), (True, "")
        )
        images = extension_isomorphism(extension, covering.action)
        ok, error = is_isomorphism(extension.quandle, covering.total, images)
        self.assertTrue(ok, error)
        return cocycle

    def test_committed_sl23_fixtures(self):
        text_file = TextFile()
        f = asyncio.run(
            text_file.load_records(os.path.join(FIXTURES, "groups", "sl23.grp"))
        ).find("automorphisms", "f4")
        self.assertEqual(fix_subgroup(f.group, f).order, 4)
        cocycle = self.assertRoundTrip(f.group, f)

        committed = asyncio.run(
            text_file.load_records(os.path.join(FIXTURES, "cocycles", "sl23_phi.txt"))
        ).cocycles[0]
        self.assertEqual(committed, cocycle)
        self.assertEqual(committed.coefficient.name, "Lambda")
        self.assertEqual(committed.base.name, "H_SL23_4")

        quandle = asyncio.run(
            text_file.load_records(os.path.join(FIXTURES, "quandles", "sl23_ext.qnd"))
        ).quandles[0]
        self.assertEqual(extension_quandle(committed).quandle, quandle)

    def test_rebased_leaves_the_original_alone(self):
        group, f = sl23_galex()
        covering = covering_p_lambda(group, f, fix_subgroup(group, f))
        cocycle = extract_cocycle(covering)
        coefficient_name = cocycle.coefficient.name

        rebased = cocycle.rebased(
            covering.base.renamed("H"), cocycle.coefficient.renamed("Lambda")
        )
        self.assertEqual(rebased, cocycle)
        self.assertEqual((rebased.base.name, rebased.coefficient.name), ("H", "Lambda"))
        self.assertEqual(rebased.coefficient, cocycle.coefficient)
        self.assertEqual(cocycle.coefficient.name, coefficient_name)
        self.assertIs(cocycle.base, covering.base)

    def test_trivial_cocycle(self):
        cocycle = trivial_cocycle(r3(), cyclic_group(2))
        self.assertEqual(validate_cocycle(cocycle), (True, ""))
        extension = extension_quandle(cocycle)
        self.assertEqual(extension.quandle.order, 6)
        self.assertEqual(extension.element(extension.index(1, 2)), (1, 2))
        self.assertEqual(extension.projection().tolist(), [0, 0, 1, 1, 2, 2])

    def test_sl23_extension(self):
        group, f = sl23_galex()
        cocycle = self.assertRoundTrip(group, f)
        self.assertEqual(cocycle.coefficient.order, 4)
        self.assertTrue(is_abelian(cocycle.coefficient))

    def test_a5_nonabelian_extension(self):
        group, f = a5_transposition_conjugation()
        cocycle = self.assertRoundTrip(group, f)
        self.assertEqual(cocycle.coefficient.order, 6)
        self.assertFalse(is_abelian(cocycle.coefficient))

    def test_order_two_coefficients(self):
        cocycle = self.assertRoundTrip(cyclic_group(6), unit_automorphism(6, 5))
        self.assertEqual(cocycle.coefficient.order, 2)
        self.assertEqual(cocycle.base.order, 3)

    def test_explicit_section(self):
        group, f = sl23_galex()
        covering = covering_p_lambda(group, f, fix_subgroup(group, f))
        section = [max(covering.fiber_over(q)) for q in range(covering.base.order)]
        cocycle = extract_cocycle(covering, section=section)
        extension = extension_quandle(cocycle)
        images = extension_isomorphism(extension, covering.action)
        self.assertTrue(is_isomorphism(extension.quandle, covering.total, images)[0])

    def test_violations(self):
        table = np.zeros((3, 3), dtype=np.int64)
        table[0, 0] = 1
        self.assertEqual(
            validate_cocycle(Cocycle(r3(), cyclic_group(2), table)), (False, "NotNormalized(1)")
        )

        table = np.zeros((3, 3), dtype=np.int64)
        table[0, 1] = 1
        broken = Cocycle(r3(), cyclic_group(2), table)
        self.assertEqual(validate_cocycle(broken), (False, "CocycleCondition(1,2,1)"))
        with self.assertRaises(TangleColorError) as ctx:
            extension_quandle(broken)
        self.assertEqual(ctx.exception.kind, "InvalidCocycle")

    def test_bad_section(self):
        group, f = sl23_galex()
        covering = covering_p_lambda(group, f, fix_subgroup(group, f))
        with self.assertRaises(TangleColorError) as ctx:
            extract_cocycle(covering, section=[0])
        self.assertEqual(ctx.exception.kind, "BadSection")

        section = list(default_section(covering))
        section[0], section[1] = section[1], section[0]
        with self.assertRaises(TangleColorError) as ctx:
            extract_cocycle(covering, section=section)
        self.assertEqual(ctx.exception.kind, "BadSection")

    def test_missing_action(self):
        group, f = sl23_galex()
        covering = covering_p_lambda(group, f, fix_subgroup(group, f))
        bare = Covering(covering.total, covering.base, covering.map)
        with self.assertRaises(TangleColorError) as ctx:
            extract_cocycle(bare)
        self.assertEqual(ctx.exception.kind, "ActionNotDeck")


if __name__ == "__main__":
    unittest.main()
