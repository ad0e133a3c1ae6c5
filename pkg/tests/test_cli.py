import os
import sys
import shutil
import asyncio
import tempfile
import unittest

from click.testing import CliRunner

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.config import settings
from src.run import cli
from src.main import handle_command
from src.storage import lookup_handler, register_handler
from src.structure import Command
from src.algebra.galex import galex
from src.data.processer.textfile import TextFile, format_automorphism, format_group, parse_records
from tests.helpers import FIXTURES, sl23_galex

R3_FILE = os.path.join(FIXTURES, "quandles", "r3.qnd")
Z5_FILE = os.path.join(FIXTURES, "groups", "z5.grp")
SL23_FILE = os.path.join(FIXTURES, "groups", "sl23.grp")


class CliTest(unittest.TestCase):
    """Test class for the command line surface"""

    def setUp(self):
        self.runner = CliRunner(mix_stderr=False)
        self.tmp = tempfile.mkdtemp()
        group, f = sl23_galex()
        self.group_file = os.path.join(self.tmp, "sl23.grp")
        with open(self.group_file, "w") as handle:
            handle.write("\n".join(format_group(group) + format_automorphism(f)) + "\n")

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def invoke(self, *args):
        return self.runner.invoke(cli, list(args))

    def extract(self) -> str:
        ext = os.path.join(self.tmp, "ext.qnd")
        result = self.invoke(
            "cocycle",
            "extract",
            "--group",
            self.group_file,
            "--auto",
            "f4",
            "--out",
            os.path.join(self.tmp, "cocycle.txt"),
            "--extension-out",
            ext,
        )
        self.assertEqual(result.exit_code, 0, result.stderr)
        self.assertEqual(result.output, "OK phi |X|=6 |Λ|=4\n")
        return ext

    def test_quandle_check(self):
        result = self.invoke("quandle", "check", R3_FILE)
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, "OK connected faithful |Inn|=6\n")

    def test_corrupt_file(self):
        path = os.path.join(FIXTURES, "bad", "r3_corrupt.qnd")
        result = self.invoke("quandle", "check", path)
        self.assertEqual(result.exit_code, 1)
        self.assertIn(f"error: {path}: record R3bad: ColumnNotBijective(1)", result.stderr)

    def test_quandle_info(self):
        result = self.invoke("quandle", "info", "-q", R3_FILE)
        self.assertEqual(result.exit_code, 0)
        self.assertIn("|Inn| 6\n", result.output)
        self.assertIn("|Inn'| 3\n", result.output)
        self.assertIn("p 1\n", result.output)

        result = self.invoke("quandle", "info", "--group", self.group_file, "--auto", "f4")
        self.assertEqual(result.exit_code, 0, result.stderr)
        self.assertIn("fiber sizes 4,4,4,4,4,4\n", result.output)
        self.assertIn("extension abelian_extension(|Λ|=4)\n", result.output)

    def test_inn_bound(self):
        original = settings.max_inn_order
        try:
            result = self.invoke("--max-inn-order", "2", "quandle", "info", "-q", R3_FILE)
        finally:
            settings.max_inn_order = original
        self.assertEqual(result.exit_code, 1)
        self.assertIn("error: OrderOverflow", result.stderr)

    def test_galex(self):
        out = os.path.join(self.tmp, "galex.qnd")
        result = self.invoke("quandle", "galex", "--group", self.group_file, "--auto", "f4", "--out", out)
        self.assertEqual(result.exit_code, 0, result.stderr)
        records = asyncio.run(TextFile().load_records(out))
        group, f = sl23_galex()
        self.assertEqual(records.quandles[0], galex(group, f))

    def test_galex_list(self):
        result = self.invoke("quandle", "galex", "--group", Z5_FILE, "--list")
        self.assertEqual(result.exit_code, 0, result.stderr)
        lines = result.output.splitlines()
        self.assertEqual(len(lines), 4)
        self.assertEqual(lines[0], "f1\tsize=1\t|Fix|=5\tconnected=no")
        self.assertTrue(all(line.endswith("|Fix|=1\tconnected=yes") for line in lines[1:]))

    def test_conj_and_homog(self):
        result = self.invoke(
            "quandle", "conj", "--permgroup", os.path.join(FIXTURES, "permgroups", "s3.perm"),
            "--element", "(1 2)",
        )
        self.assertEqual(result.exit_code, 0, result.stderr)
        records = parse_records(result.output)
        self.assertEqual(records.quandles[0].order, 3)

        result = self.invoke("quandle", "homog", "--group", Z5_FILE, "--auto", "x2")
        self.assertEqual(result.exit_code, 0, result.stderr)
        self.assertIn("quandle H_Z5_1 5\n", result.output)

    def test_extract_and_check(self):
        self.extract()
        result = self.invoke("cocycle", "check", os.path.join(self.tmp, "cocycle.txt"))
        self.assertEqual(result.exit_code, 0, result.stderr)
        self.assertEqual(result.output, "OK phi |X|=6 |Λ|=4 abelian\n")

    def test_psi(self):
        result = self.invoke("psi", "-q", R3_FILE, "--knots", os.path.join(FIXTURES, "knots.txt"))
        self.assertEqual(result.exit_code, 0, result.stderr)
        self.assertEqual(
            result.output,
            "unknot\tR3\tpsi=1\n3_1\tR3\tpsi=3\n4_1\tR3\tpsi=1\n5_1\tR3\tpsi=1\n5_2\tR3\tpsi=1\n",
        )

        ext = self.extract()
        result = self.invoke("psi", "-q", ext, "--braid", "2 3 1 1 1")
        self.assertEqual(result.exit_code, 0, result.stderr)
        knot, name, field = result.output.strip().split("\t")
        self.assertEqual((knot, name), ("braid", "ext_SL23"))
        counts = [int(c) for c in field[len("psi="):].split(",")]
        self.assertEqual(counts[0], 1)
        self.assertEqual(sorted(counts), [0, 0, 1, 4])

    def test_psi_errors(self):
        result = self.invoke("psi", "-q", R3_FILE, "--braid", "2 2 1 1")
        self.assertEqual(result.exit_code, 1)
        self.assertIn("error: --braid '2 2 1 1': NotAKnot(components=2)", result.stderr)

        result = self.invoke("psi", "-q", R3_FILE, "--braid", "2 3 1 1 1", "--base", "9")
        self.assertEqual(result.exit_code, 1)
        self.assertIn("error: base point 9 outside 1..3 of R3", result.stderr)

        result = self.invoke("psi", "-q", R3_FILE, "--knots", os.path.join(FIXTURES, "bad", "links.txt"))
        self.assertEqual(result.exit_code, 1)
        self.assertIn("record bad: NotAKnot(components=3)", result.stderr)

    def test_symmetry(self):
        ext = self.extract()
        result = self.invoke("symmetry", "-q", ext, "--braid", "2 3 1 1 1")
        self.assertEqual(result.exit_code, 0, result.stderr)
        self.assertTrue(result.output.rstrip("\n").endswith("distinguishes=m,rm"))

        result = self.invoke("symmetry", "-q", R3_FILE, "--braid", "2 3 1 1 1", "--symmetries", "m")
        self.assertEqual(
            result.output, "braid\tR3\tpsi=3\tpsi_m=3\tpsi_r=-\tpsi_rm=-\tdistinguishes=-\n"
        )

    def test_sweep_is_stable_across_workers(self):
        ext = self.extract()
        quandles = os.path.join(self.tmp, "quandles")
        os.makedirs(quandles)
        shutil.copy(R3_FILE, quandles)
        shutil.copy(ext, quandles)
        knots = os.path.join(self.tmp, "knots.txt")
        with open(knots, "w") as handle:
            handle.write("knot 3_1 2 3 1 1 1\nknot 4_1 3 4 1 -2 1 -2\n")

        outputs = []
        for workers in ("1", "2", "8"):
            result = self.invoke("sweep", "--quandles", quandles, "--knots", knots, "--workers", workers)
            self.assertEqual(result.exit_code, 0, result.stderr)
            outputs.append(result.output)
        self.assertEqual(outputs[0], outputs[1])
        self.assertEqual(outputs[0], outputs[2])

        lines = outputs[0].splitlines()
        self.assertEqual(len(lines), 4)
        self.assertTrue(lines[0].startswith("3_1\text_SL23\t"))
        self.assertTrue(lines[0].endswith("distinguishes=m,rm"))
        self.assertTrue(lines[1].endswith("distinguishes=-"))
        self.assertTrue(lines[2].startswith("3_1\tR3\t"))

    def test_extract_reproduces_committed_fixtures(self):
        phi = os.path.join(self.tmp, "phi.txt")
        ext = os.path.join(self.tmp, "sl23_ext.qnd")
        result = self.invoke(
            "cocycle", "extract", "--group", SL23_FILE, "--auto", "f4",
            "--out", phi, "--extension-out", ext,
        )
        self.assertEqual(result.exit_code, 0, result.stderr)
        self.assertEqual(result.output, "OK phi |X|=6 |Λ|=4\n")

        for written, committed in (
            (phi, os.path.join(FIXTURES, "cocycles", "sl23_phi.txt")),
            (ext, os.path.join(FIXTURES, "quandles", "sl23_ext.qnd")),
        ):
            with open(written) as a, open(committed) as b:
                self.assertEqual(a.read(), b.read())

        with open(phi) as handle:
            text = handle.read()
        self.assertTrue(text.startswith("group Lambda 4\n"))
        self.assertIn("quandle H_SL23_4 6\n", text)

    def test_sweep_over_fixture_quandles(self):
        result = self.invoke(
            "sweep", "--quandles", os.path.join(FIXTURES, "quandles"),
            "--knots", os.path.join(FIXTURES, "knots.txt"),
        )
        self.assertEqual(result.exit_code, 0, result.stderr)
        lines = result.output.splitlines()
        self.assertEqual(len(lines), 15)
        self.assertEqual(
            lines[1], "3_1\tR3\tpsi=3\tpsi_m=3\tpsi_r=3\tpsi_rm=3\tdistinguishes=-"
        )
        trefoil = [line for line in lines if line.startswith("3_1\text_SL23\t")]
        self.assertEqual(len(trefoil), 1)
        self.assertTrue(trefoil[0].endswith("distinguishes=m,rm"))
        figure_eight = [line for line in lines if line.startswith("4_1\text_SL23\t")]
        self.assertTrue(figure_eight[0].endswith("distinguishes=-"))

    def test_handle_command_rejections(self):
        command = asyncio.run(handle_command(Command("nope", {}), TextFile()))
        self.assertFalse(command.valid)
        self.assertEqual(command.error, "unknown command nope")

        command = asyncio.run(handle_command(Command("psi", {"workers": 0}), TextFile()))
        self.assertEqual(command.error, "workers must be at least 1")

    def test_handler_keys_register_once(self):
        self.assertIsNotNone(lookup_handler("quandle-check"))
        self.assertIsNone(lookup_handler("quandle"))
        with self.assertRaises(KeyError):
            register_handler("psi")(lambda command, data_processer: command)


if __name__ == "__main__":
    unittest.main()
