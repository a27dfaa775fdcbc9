#!/usr/bin/env python3
"""Tests for the text and JSON report formatters.

Tests cover:
- Brace-list rendering of tubes, graphs and disconnected tubings
- TextReportFormatter lines for chains, fibers, axioms and suite reports
- JsonReportFormatter header and accumulated fields
"""

from __future__ import annotations

import io
import json
import unittest
from contextlib import redirect_stdout

from tests.test_base import tubing
from tubings import __version__
from tubings.chains import TubingChain, boundary, prelie_coproduct
from tubings.colors import ColorConfig, ColorMode
from tubings.dtub import Component, DChain, DTubing
from tubings.formatters import (
    JsonReportFormatter,
    TextReportFormatter,
    format_dtubing,
    format_graph,
    format_tubes,
)
from tubings.graph import complete, linear
from tubings.opcat import axiom_suite
from tubings.suites import VerificationReport
from tubings.tubing import enumerate_tubings, trivial_tubing
from tubings.types import AxiomResult, CaseFailure, SuiteName


def capture(fn, *args) -> str:
    out = io.StringIO()
    with redirect_stdout(out):
        fn(*args)
    return out.getvalue()


class TestHelpers(unittest.TestCase):

    def test_format_tubes(self):
        self.assertEqual(format_tubes(tubing(linear(3), [1], [1, 2])), "{1} {1,2} {1,2,3}")

    def test_format_graph(self):
        self.assertEqual(format_graph(linear(3)), "graph n=3 edges 1-2 2-3")
        self.assertEqual(format_graph(complete(1)), "graph n=1")

    def test_format_dtubing(self):
        point = trivial_tubing(complete(1))
        D = DTubing((Component(point, True), Component(point, False)))
        self.assertEqual(format_dtubing(D), "[{1}]^ | [{1}]")


class TestTextReportFormatter(unittest.TestCase):
    """Text output with color disabled."""

    def setUp(self):
        self.formatter = TextReportFormatter("boundary", color_config=ColorConfig(mode=ColorMode.NEVER))

    def test_chain(self):
        output = capture(self.formatter.format_chain, boundary(trivial_tubing(complete(2))))
        self.assertEqual(output.splitlines(), ["-1  {1} {1,2}", "+1  {1,2} {2}"])

    def test_zero_chain(self):
        self.assertEqual(capture(self.formatter.format_chain, TubingChain.zero()), "0\n")

    def test_coproduct_writes_unit_as_one(self):
        output = capture(self.formatter.format_coproduct, prelie_coproduct(trivial_tubing(complete(1))))
        self.assertIn("+1  1  ⊗  {1}", output)
        self.assertIn("+1  {1}  ⊗  1", output)

    def test_tubing_on_complete_graph_shows_surjection(self):
        output = capture(self.formatter.format_tubing, tubing(complete(3), [1], [1, 2]))
        self.assertIn("surjection: (1,2,3)", output)

    def test_tubings(self):
        output = capture(self.formatter.format_tubings, linear(3), enumerate_tubings(linear(3)))
        self.assertIn("graph n=3", output)
        self.assertIn("11 tubings", output)

    def test_dchain(self):
        point = trivial_tubing(complete(1))
        D = DTubing((Component(point, False), Component(point, True)))
        output = capture(self.formatter.format_dchain, "vdash", DChain.single(D))
        self.assertEqual(output.splitlines(), ["vdash", "+1  [{1}] | [{1}]^"])

    def test_fiber(self):
        output = capture(self.formatter.format_fiber, 1, complete(2), tubing(complete(2), [1]), (1, 1, 2))
        self.assertIn("|f| = (1,1,2)", output)
        self.assertIn("fiber over 1: graph n=2 edges 1-2", output)

    def test_axioms(self):
        results = [AxiomResult("terminal", 3, None), AxiomResult("fiber sizes", 5, {"index": 2})]
        output = capture(self.formatter.format_axioms, complete(2), results)
        self.assertIn("PASS  terminal (3 cases)", output)
        self.assertIn("FAIL  fiber sizes (5 cases)", output)
        self.assertIn('counterexample: {"index":2}', output)

    def test_report(self):
        report = VerificationReport(SuiteName.D2, "connected graphs n=1: 1", cases=4, samples=0)
        output = capture(self.formatter.format_report, report)
        self.assertTrue(output.startswith("PASS  d2"))
        self.assertIn("cases: 4", output)
        self.assertNotIn("seed", output)

    def test_report_with_hidden_failures(self):
        report = VerificationReport(SuiteName.D2, "", samples=5)
        report.record(CaseFailure(f"case {k}", {}) for k in range(12))
        output = capture(self.formatter.format_report, report)
        self.assertTrue(output.startswith("FAIL  d2"))
        self.assertIn("... 2 more", output)
        self.assertIn("seed: 0, samples: 5", output)

    def test_color_when_forced(self):
        formatter = TextReportFormatter("verify d2", color_config=ColorConfig(mode=ColorMode.ALWAYS))
        output = capture(formatter.format_report, VerificationReport(SuiteName.D2, ""))
        self.assertIn("\033[1;32mPASS", output)


class TestJsonReportFormatter(unittest.TestCase):
    """JSON output is one document printed by finalize."""

    def emit(self, formatter) -> dict:
        return json.loads(capture(formatter.finalize))

    def test_header(self):
        formatter = JsonReportFormatter("fvector", seed=3)
        data = self.emit(formatter)
        self.assertEqual(data["header"], {"name": "tubings", "version": __version__,
                                          "command": "fvector", "seed": 3})

    def test_nothing_printed_before_finalize(self):
        formatter = JsonReportFormatter("enumerate")
        self.assertEqual(capture(formatter.format_tubings, linear(2), enumerate_tubings(linear(2))), "")

    def test_f_vector(self):
        formatter = JsonReportFormatter("fvector")
        formatter.format_f_vector(complete(3), [6, 6, 1])
        data = self.emit(formatter)
        self.assertEqual(data["fVector"], [6, 6, 1])
        self.assertEqual(data["total"], 13)
        self.assertEqual(data["graph"]["n"], 3)

    def test_chain(self):
        formatter = JsonReportFormatter("boundary")
        formatter.format_chain(boundary(tubing(complete(2), [1])))
        self.assertEqual(self.emit(formatter)["chain"], [])

    def test_axioms(self):
        formatter = JsonReportFormatter("opcat verify")
        formatter.format_axioms(complete(2), axiom_suite(complete(2)))
        data = self.emit(formatter)
        self.assertTrue(data["passed"])
        self.assertEqual(data["axioms"][0]["axiom"], "terminal")
        self.assertIsNone(data["axioms"][0]["counterexample"])

    def test_report(self):
        report = VerificationReport(SuiteName.PRELIE, "census", cases=2, seed=1, samples=9)
        report.record([CaseFailure("prelie x", {"tubing": {}})])
        formatter = JsonReportFormatter("verify prelie", seed=1)
        formatter.format_report(report)
        data = self.emit(formatter)
        self.assertEqual(data["suite"], "prelie")
        self.assertFalse(data["passed"])
        self.assertEqual(data["failureCount"], 1)
        self.assertEqual(data["failures"], [{"case": "prelie x", "detail": {"tubing": {}}}])

    def test_pretty(self):
        formatter = JsonReportFormatter("fvector", pretty=True)
        self.assertIn('\n  "header"', capture(formatter.finalize))


if __name__ == '__main__':
    unittest.main()
