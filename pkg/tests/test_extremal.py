#!/usr/bin/env python

"""Tests for `kkclique.extremal`."""

import unittest

from kkclique.binomial import binom, kk_bound
from kkclique.extremal import (
    corollary1_params,
    corollary2_sequence,
    gap_report,
    gap_table,
    minimal_admissible,
    plateau_check,
    rows_to_frame,
    table_section3,
    theorem4_count,
    turan_k3_count,
    turan_k4_count,
    turan_k5_count,
    verify_bollobas,
    verify_canonical_x,
    verify_identity_t5,
    verify_identity_t6,
    verify_theorem3,
    verify_theorem4,
)
from kkclique.extremal.tables import expected_gap
from kkclique.graph import apex_construction, clique_profile, count_cliques, turan_graph
from kkclique.util.exceptions import PreconditionError

# n, K_3, K_5, [K_3]^3_5 for T(n, n - 2)
PRINTED_TABLE = [
    (6, 12, 0, 1),
    (7, 25, 4, 6),
    (8, 44, 20, 23),
    (9, 70, 61, 65),
    (10, 104, 146, 151),
    (11, 147, 301, 307),
    (12, 200, 560, 567),
    (13, 264, 966, 974),
    (14, 340, 1572, 1581),
    (15, 429, 2442, 2452),
]


class TestFormulas(unittest.TestCase):
    """Closed forms for T(n, n - 2)."""

    def test_000_examples(self):
        self.assertEqual(turan_k3_count(12), 200)
        self.assertEqual(turan_k3_count(6), 12)
        self.assertEqual(turan_k3_count(15), 429)
        self.assertEqual(turan_k4_count(12), 406)
        self.assertEqual(turan_k4_count(4), 0)
        self.assertEqual(turan_k4_count(7), 16)
        self.assertEqual(turan_k5_count(10), 146)
        self.assertEqual(turan_k5_count(6), 0)
        self.assertEqual(turan_k5_count(15), 2442)

    def test_001_preconditions(self):
        with self.assertRaises(PreconditionError):
            turan_k3_count(3)
        with self.assertRaises(PreconditionError):
            turan_k5_count(4)

    def test_002_formulas_match_enumeration(self):
        for n in range(5, 17):
            profile = clique_profile(turan_graph(n, n - 2), 5)
            self.assertEqual(profile[3], turan_k3_count(n), n)
            self.assertEqual(profile[4], turan_k4_count(n), n)
            self.assertEqual(profile[5], turan_k5_count(n), n)

    def test_003_theorem4_count(self):
        self.assertEqual(theorem4_count(6, 2, 3), 26)
        self.assertEqual(theorem4_count(5, 0, 3), binom(6, 3))
        with self.assertRaises(PreconditionError):
            theorem4_count(5, 5, 3)

    def test_004_k5_gap_grows_linearly(self):
        for n in range(7, 201):
            gap = kk_bound(turan_k3_count(n), 3, 5) - turan_k5_count(n)
            self.assertEqual(gap, n - 5, n)


class TestBollobas(unittest.TestCase):
    """Apex graphs that attain the bound."""

    def test_000_examples(self):
        report = verify_bollobas(11, 10, 5, 10)
        self.assertTrue(report.passed)
        self.assertEqual(report.values["k_r"], 672)
        self.assertEqual(report.values["k_s"], 21)
        report = verify_bollobas(6, 3, 2, 3)
        self.assertTrue(report.passed)
        self.assertEqual((report.values["k_r"], report.values["k_s"]), (18, 23))
        report = verify_bollobas(5, 4, 2, 3)
        self.assertTrue(report.passed)
        self.assertEqual(report.values["k_s"], 16)

    def test_001_sweep(self):
        for n in range(4, 10):
            for r in range(2, n - 1):
                for s in range(r + 1, n):
                    for m in range(r - 1, n):
                        self.assertTrue(verify_bollobas(n, m, r, s).passed, (n, m, r, s))

    def test_002_preconditions(self):
        with self.assertRaises(PreconditionError):
            verify_bollobas(5, 4, 3, 5)
        with self.assertRaises(PreconditionError):
            verify_bollobas(8, 1, 3, 5)

    def test_003_report_dict(self):
        payload = verify_bollobas(6, 3, 2, 3).to_dict()
        self.assertEqual(payload["check"], "t2")
        self.assertEqual(payload["parameters"], {"n": 6, "m": 3, "r": 2, "s": 3})
        self.assertTrue(payload["passed"])
        self.assertEqual(payload["values"]["canonical"], "C(6,2)+C(3,1)")


class TestTheorem3(unittest.TestCase):
    """Two external vertices and the constant runs of the bound."""

    def test_000_worked_example(self):
        report = verify_theorem3(11, 10, 7, 5, 10)
        self.assertTrue(report.passed)
        self.assertEqual(report.values["x"], 707)
        self.assertEqual(report.values["k_s"], 21)
        self.assertEqual(report.values["t"], 7)
        self.assertEqual(report.values["canonical"], "C(11,5)+C(10,4)+C(7,3)")

    def test_001_figure_graph_counts(self):
        g = apex_construction(11, [10, 7])
        self.assertEqual(g.n, 13)
        self.assertEqual(count_cliques(g, 5), 707)
        self.assertEqual(count_cliques(g, 10), 21)
        self.assertEqual(kk_bound(707, 5, 10), 21)

    def test_002_larger_core(self):
        report = verify_theorem3(12, 10, 7, 5, 10)
        self.assertTrue(report.passed)
        self.assertEqual(report.values["x"], 1037)
        self.assertEqual(report.values["k_s"], 76)

    def test_003_minimal_instances(self):
        for u, (n, m, w, r, s, x, ks) in {
            2: (7, 6, 3, 3, 6, 53, 13),
            3: (9, 8, 5, 4, 8, 192, 17),
            4: (11, 10, 7, 5, 10, 707, 21),
        }.items():
            report = verify_theorem3(n, m, w, r, s)
            self.assertTrue(report.passed, u)
            self.assertEqual((report.values["x"], report.values["k_s"]), (x, ks), u)

    def test_004_rejected_inputs(self):
        # s - 2 > t fails
        with self.assertRaises(PreconditionError):
            verify_theorem3(11, 10, 7, 5, 8)
        # C(9,4) = 126 is no C(t,3)
        with self.assertRaises(PreconditionError):
            verify_theorem3(11, 10, 9, 5, 12)
        with self.assertRaises(PreconditionError):
            verify_theorem3(11, 10, 7, 2, 10)

    def test_005_corollary1_params(self):
        self.assertEqual(tuple(corollary1_params(4, 10)), (5, 7, 7))
        self.assertEqual(tuple(corollary1_params(2, 6)), (3, 3, 3))
        self.assertEqual(tuple(corollary1_params(3, 8)), (4, 5, 5))
        self.assertEqual(minimal_admissible(4, 10), (11, 10))
        with self.assertRaises(PreconditionError):
            corollary1_params(1, 6)
        with self.assertRaises(PreconditionError):
            corollary1_params(3, 7)

    def test_006_plateau_examples(self):
        report = plateau_check(11, 10, 7, 5, 10)
        self.assertTrue(report.passed)
        self.assertEqual(report.values["length"], 36)
        self.assertEqual(report.values["bound"], 21)
        self.assertEqual((report.values["start"], report.values["end"]), (672, 707))
        report = plateau_check(12, 10, 7, 5, 10)
        self.assertTrue(report.passed)
        self.assertEqual((report.values["length"], report.values["bound"]), (36, 76))

    def test_007_plateau_of_length_one(self):
        report = plateau_check(7, 6, 0, 3, 6)
        self.assertTrue(report.passed)
        self.assertEqual(report.values["length"], 1)
        self.assertEqual(report.values["bound"], 13)

    def test_008_plateau_for_minimal_instances(self):
        for u in (2, 3, 4):
            s = 2 * u + 2
            r, t, _ = corollary1_params(u, s)
            n, m = minimal_admissible(u, s)
            report = plateau_check(n, m, t, r, s)
            self.assertTrue(report.passed, u)
            self.assertEqual(report.values["length"], binom(t, r - 2) + 1)

    def test_009_corollary2_sequence(self):
        run = corollary2_sequence(4, 10)
        self.assertEqual((run.start, run.stop), (672, 708))
        self.assertEqual(len(run), 36)
        self.assertEqual({kk_bound(y, 5, 10) for y in run}, {21})
        self.assertEqual(len(corollary2_sequence(2, 6)), 4)


class TestTheorem4(unittest.TestCase):

    def test_000_example(self):
        report = verify_theorem4(6, 2, 3)
        self.assertTrue(report.passed)
        self.assertEqual(report.values["k_s"], 26)

    def test_001_sweep(self):
        for n in range(1, 15):
            for p in range(n):
                for s in range(1, n + 2):
                    self.assertTrue(verify_theorem4(n, p, s).passed, (n, p, s))

    def test_002_preconditions(self):
        with self.assertRaises(PreconditionError):
            verify_theorem4(5, 5, 3)
        with self.assertRaises(PreconditionError):
            verify_theorem4(5, 1, 7)


class TestIdentities(unittest.TestCase):
    """Identities behind the T(n, n - 2) gaps."""

    def test_000_examples(self):
        report = verify_identity_t5(12)
        self.assertTrue(report.passed)
        self.assertEqual((report.values["lhs"], report.values["bound"]), (406, 407))
        report = verify_identity_t6(10)
        self.assertTrue(report.passed)
        self.assertEqual((report.values["k5"], report.values["bound"]), (146, 151))
        report = verify_identity_t6(7)
        self.assertEqual((report.values["k5"], report.values["gap"]), (4, 2))
        self.assertEqual(verify_canonical_x(12).values["canonical"], "C(11,3)+C(8,2)+C(7,1)")
        self.assertEqual(verify_canonical_x(7).values["canonical"], "C(6,3)+C(3,2)+C(2,1)")

    def test_001_ranges(self):
        for n in range(7, 201):
            self.assertTrue(verify_identity_t5(n).passed, n)
            self.assertTrue(verify_identity_t6(n).passed, n)
            self.assertTrue(verify_canonical_x(n).passed, n)

    def test_002_reject_small_n(self):
        for check in (verify_identity_t5, verify_identity_t6, verify_canonical_x):
            with self.assertRaises(PreconditionError):
                check(6)


class TestTables(unittest.TestCase):
    """Gap tables and reports."""

    def test_000_printed_rows(self):
        rows = table_section3(6, 15)
        self.assertEqual([(row.n, row.x, row.actual, row.bound) for row in rows], PRINTED_TABLE)
        self.assertEqual([row.gap for row in rows], [1] + list(range(2, 11)))

    def test_001_extended_rows(self):
        row = table_section3(16, 16)[0]
        self.assertEqual(row.gap, 11)
        row = table_section3(13, 13)[0]
        self.assertEqual((row.x, row.actual, row.bound, row.gap), (264, 966, 974, 8))

    def test_002_k4_rows(self):
        row = gap_table((3, 4), 7, 7)[0]
        self.assertEqual((row.x, row.actual, row.bound, row.gap), (25, 16, 17, 1))

    def test_003_threads_do_not_change_rows(self):
        self.assertEqual(gap_table((3, 5), 6, 30, workers=4), gap_table((3, 5), 6, 30))

    def test_004_rejected_ranges(self):
        with self.assertRaises(PreconditionError):
            gap_table((3, 5), 5, 10)
        with self.assertRaises(PreconditionError):
            gap_table((3, 5), 10, 9)
        with self.assertRaises(PreconditionError):
            gap_table((2, 3), 6, 9)
        with self.assertRaises(PreconditionError):
            gap_report((3, 4), 6, 10)
        with self.assertRaises(PreconditionError):
            expected_gap((4, 5), 9)

    def test_005_gap_reports(self):
        report = gap_report((3, 4), 7, 20)
        self.assertTrue(report.passed)
        self.assertEqual({row.gap for row in report.rows}, {1})
        report = gap_report((3, 5), 7, 15)
        self.assertTrue(report.passed)
        self.assertEqual([row.gap for row in report.rows], list(range(2, 11)))
        self.assertEqual([row.gap for row in gap_report((3, 5), 7, 7).rows], [2])

    def test_006_frame_and_csv(self):
        frame = rows_to_frame(table_section3(6, 15), (3, 5))
        self.assertEqual(list(frame.columns), ["n", "K3", "K5", "bound", "gap"])
        text = frame.to_csv(index=False, lineterminator="\n")
        lines = text.splitlines()
        self.assertEqual(lines[0], "n,K3,K5,bound,gap")
        self.assertEqual(lines[1], "6,12,0,1,1")
        self.assertEqual(lines[-1], "15,429,2442,2452,10")
        k4 = rows_to_frame(gap_table((3, 4), 7, 7), (3, 4))
        self.assertEqual(list(k4.columns), ["n", "K3", "K4", "bound", "gap"])

    def test_007_big_counts_stay_exact(self):
        frame = rows_to_frame(gap_table((3, 5), 200, 200, cross_check=False), (3, 5))
        self.assertEqual(frame["K5"][0], turan_k5_count(200))
        self.assertIn(str(turan_k5_count(200)), frame.to_csv(index=False))


if __name__ == "__main__":
    unittest.main()
