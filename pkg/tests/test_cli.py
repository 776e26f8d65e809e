#!/usr/bin/env python

"""Tests for the `kkclique` command line."""

import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from unittest import mock

from kkclique.api.cli import main
from kkclique.data_source_connection import write_graph
from kkclique.graph import Graph, complete_graph
from kkclique.util.config import get_settings


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestCliNumbers(unittest.TestCase):
    """canon, bound and table."""

    def test_000_canon(self):
        self.assertEqual(run("canon", "200", "3"), (0, "C(11,3)+C(8,2)+C(7,1)\n", ""))
        self.assertEqual(run("canon", "0", "3")[1], "0\n")
        self.assertEqual(run("canon", "707", "5")[1], "C(11,5)+C(10,4)+C(7,3)\n")

    def test_001_bound(self):
        self.assertEqual(run("bound", "200", "3", "4")[:2], (0, "407\n"))
        self.assertEqual(run("bound", "707", "5", "10")[1], "21\n")
        self.assertEqual(run("bound", "0", "3", "4")[1], "0\n")

    def test_002_bound_structured(self):
        code, out, _ = run("--format", "structured", "bound", "200", "3", "4")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out), {
            "command": "bound",
            "parameters": {"x": 200, "r": 3, "s": 4},
            "result": 407,
            "passed": True,
        })

    def test_003_bound_rejects_r_not_below_s(self):
        code, out, err = run("bound", "10", "4", "3")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("kkclique bound:", err)

    def test_004_argparse_usage_error(self):
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as context:
                main(["bound", "1", "2"])
        self.assertEqual(context.exception.code, 2)

    def test_005_table_csv(self):
        code, out, _ = run("table", "7", "7", "--pair", "3,4", "--csv")
        self.assertEqual(code, 0)
        self.assertEqual(out, "n,K3,K4,bound,gap\n7,25,16,17,1\n")
        self.assertEqual(run("table", "6", "6", "--csv")[1], "n,K3,K5,bound,gap\n6,12,0,1,1\n")

    def test_006_full_table(self):
        code, out, _ = run("--format", "csv", "table", "6", "15", "--pair", "3,5")
        lines = out.splitlines()
        self.assertEqual(code, 0)
        self.assertEqual(len(lines), 11)
        self.assertEqual(lines[7], "12,200,560,567,7")

    def test_007_output_is_reproducible(self):
        first = run("--format", "structured", "table", "6", "20")
        self.assertEqual(first, run("--format", "structured", "table", "6", "20"))


class TestCliVerify(unittest.TestCase):
    """verify"""

    def test_000_theorem3(self):
        code, out, _ = run("verify", "t3", "11", "10", "7", "5", "10")
        self.assertEqual(code, 0)
        self.assertIn("passed: yes", out)

    def test_001_theorem4(self):
        code, out, _ = run("--format", "structured", "verify", "t4", "6", "2", "3")
        self.assertEqual(code, 0)
        payload = json.loads(out)
        self.assertEqual(payload["result"]["values"]["k_s"], 26)
        self.assertTrue(payload["passed"])

    def test_002_identity_range(self):
        code, out, _ = run("--format", "structured", "verify", "t6", "7..200")
        self.assertEqual(code, 0)
        rows = json.loads(out)["result"]
        self.assertEqual(len(rows), 194)
        self.assertTrue(all(row["passed"] for row in rows))

    def test_003_other_checks(self):
        self.assertEqual(run("verify", "t2", "11", "10", "5", "10")[0], 0)
        self.assertEqual(run("verify", "t5", "12")[0], 0)
        self.assertEqual(run("verify", "canon-x", "7..30")[0], 0)
        self.assertEqual(run("verify", "plateau", "11", "10", "7", "5", "10")[0], 0)
        self.assertEqual(run("verify", "plateau", "3", "8")[0], 0)
        self.assertEqual(run("verify", "gap", "3,4", "7", "20")[0], 0)

    def test_004_default_identity_range(self):
        get_settings.cache_clear()
        try:
            with mock.patch.dict(os.environ, {"KKCLIQUE_IDENTITY_N_MAX": "12"}, clear=True):
                code, out, _ = run("--format", "structured", "verify", "t6")
        finally:
            get_settings.cache_clear()
        self.assertEqual(code, 0)
        self.assertEqual([row["n"] for row in json.loads(out)["result"]], list(range(7, 13)))

    def test_005_rejected(self):
        self.assertEqual(run("verify", "t3", "11", "10", "7", "5", "8")[0], 2)
        self.assertEqual(run("verify", "t5", "6")[0], 2)
        self.assertEqual(run("verify", "t5", "9..8")[0], 2)
        self.assertEqual(run("verify", "t4", "6", "2")[0], 2)
        self.assertEqual(run("verify", "gap", "3;4", "7", "9")[0], 2)


class TestCliGraphs(unittest.TestCase):
    """construct, count, profile and core on files."""

    def setUp(self):
        self.folder = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.folder.cleanup()

    def path(self, name):
        return os.path.join(self.folder.name, name)

    def test_000_construct_to_stdout(self):
        code, out, _ = run("construct", "turan", "12", "10")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("12 64\n"))
        self.assertEqual(run("construct", "complete", "1")[1], "1 0\n")

    def test_001_construct_then_count(self):
        target = self.path("turan.txt")
        self.assertEqual(run("construct", "turan", "12", "10", "--out", target)[0], 0)
        self.assertEqual(run("count", target, "4")[1], "406\n")
        self.assertEqual(run("count", target, "4", "--prune")[1], "406\n")
        self.assertEqual(run("count", target, "3")[1], "200\n")

    def test_002_apex_with_dot(self):
        target, drawing = self.path("apex.txt"), self.path("apex.dot")
        code, _, _ = run("construct", "apex", "11", "10,7", "--out", target, "--dot", drawing)
        self.assertEqual(code, 0)
        self.assertEqual(run("count", target, "5")[1], "707\n")
        self.assertEqual(run("count", target, "10")[1], "21\n")
        with open(drawing, encoding="utf-8") as handle:
            dot = handle.read()
        self.assertTrue(dot.startswith("graph apex {"))
        self.assertIn('  13 [style=filled, fillcolor="lightgray"];', dot)
        self.assertIn("  1 -- 13;", dot)
        self.assertNotIn("  12 -- 13;", dot)

    def test_003_count_k5_file(self):
        target = self.path("k5.txt")
        write_graph(complete_graph(5), target)
        self.assertEqual(run("count", target, "6")[1], "0\n")
        self.assertEqual(run("count", target, "6", "--prune")[1], "0\n")

    def test_004_malformed_file(self):
        target = self.path("bad.txt")
        with open(target, "w", encoding="utf-8") as handle:
            handle.write("3 1\n1 9\n")
        code, out, err = run("count", target, "3")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("line 2", err)

    def test_005_profile(self):
        target = self.path("k4.txt")
        write_graph(complete_graph(4), target)
        code, out, _ = run("--format", "structured", "profile", target, "4")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["result"], [
            {"r": 1, "k_r": 4}, {"r": 2, "k_r": 6}, {"r": 3, "k_r": 4}, {"r": 4, "k_r": 1},
        ])

    def test_006_core(self):
        target = self.path("pendant.txt")
        write_graph(Graph(6, complete_graph(5).edges() + [(5, 6)]), target)
        code, out, _ = run("--format", "structured", "core", target, "2", "--bound", "2,3")
        self.assertEqual(code, 0)
        result = json.loads(out)["result"]
        self.assertEqual((result["vertices"], result["edges"]), (5, 10))
        self.assertEqual(result["bound_core"], 10)
        self.assertGreaterEqual(result["bound_whole_graph"], result["bound_core"])
        self.assertEqual(run("core", target, "3", "--bound", "2,3")[0], 2)

    def test_007_unknown_family_parameters(self):
        self.assertEqual(run("construct", "turan", "12")[0], 2)
        self.assertEqual(run("construct", "apex", "4", "a,b")[0], 2)

    def test_008_undecodable_file(self):
        target = self.path("latin.txt")
        with open(target, "wb") as handle:
            handle.write(b"3 1\n1 \xff2\n")
        code, out, err = run("count", target, "3")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("line 2", err)
        self.assertIn("UTF-8", err)

    def test_009_unwritable_output(self):
        code, out, err = run("construct", "complete", "3", "--out", self.folder.name)
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("kkclique construct:", err)
        missing = os.path.join(self.folder.name, "no", "such", "dir", "k3.dot")
        self.assertEqual(run("construct", "complete", "3", "--dot", missing)[0], 2)
        self.assertEqual(run("count", self.path("absent.txt"), "3")[0], 2)


class TestCliSearch(unittest.TestCase):
    """search, scan and conjecture."""

    def test_000_exhaustive(self):
        code, out, _ = run("--format", "structured", "search", "exhaustive", "6", "3", "4", "4")
        self.assertEqual(code, 0)
        result = json.loads(out)["result"]
        self.assertEqual(result["best"], 1)
        self.assertTrue(result["exhaustive_within_scope"])

    def test_001_heuristic_needs_seed(self):
        code, _, err = run("search", "heuristic", "8", "3", "4", "10")
        self.assertEqual(code, 2)
        self.assertIn("--seed", err)

    def test_002_heuristic(self):
        argv = ("--format", "structured", "search", "heuristic", "12", "3", "4", "200", "--seed", "1", "--iters", "1")
        code, out, _ = run(*argv)
        self.assertEqual(code, 0)
        self.assertGreaterEqual(json.loads(out)["result"]["best"], 406)
        self.assertEqual(run(*argv)[1], out)

    def test_003_scope_cap(self):
        code, _, err = run("search", "exhaustive", "9", "3", "4", "10")
        self.assertEqual(code, 2)
        self.assertIn("capped", err)

    def test_004_scan_csv(self):
        code, out, _ = run("--format", "csv", "scan", "3", "4", "4", "6")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "x,bound,best,tight")
        self.assertEqual(lines[-1], "4,1,1,True")

    def test_005_conjecture_scope_warning(self):
        code, out, err = run("--format", "structured", "conjecture", "12", "6")
        self.assertEqual(code, 0)
        result = json.loads(out)["result"]
        self.assertEqual(result["status"], "inconclusive")
        self.assertTrue(result["scope_insufficient"])
        self.assertIn("WARNING", err)

    def test_006_scan_default_vertex_cap(self):
        get_settings.cache_clear()
        try:
            with mock.patch.dict(os.environ, {"KKCLIQUE_V_MAX": "5"}, clear=True):
                code, out, _ = run("--format", "structured", "scan", "2", "3", "3")
        finally:
            get_settings.cache_clear()
        self.assertEqual(code, 0)
        payload = json.loads(out)
        self.assertEqual(payload["parameters"]["v_max"], 5)
        self.assertEqual(payload["result"][-1], {"x": 3, "bound": 1, "best": 1, "tight": True})


if __name__ == "__main__":
    unittest.main()
