"""
Tests for check reports and their serialization.
"""

import json
import os
import tempfile
import unittest
from fractions import Fraction

from towertk.combinatorics import Composition
from towertk.hopf import GrothendieckVector
from towertk.report import (CheckReport, ReportWriter, canonical, distinct_inputs, dumps,
                            label_str, render_csv)


def C(*parts):
    return Composition(parts)


class TestCanonical(unittest.TestCase):
    """Test conversion of results to JSON-ready data."""

    def test_scalars(self):
        """Test that numbers become strings and None/bools stay."""
        self.assertEqual(canonical(3), "3")
        self.assertEqual(canonical(Fraction(-1, 2)), "-1/2")
        self.assertIsNone(canonical(None))
        self.assertIs(canonical(True), True)

    def test_labels(self):
        """Test labels and tensor labels."""
        self.assertEqual(canonical(C(2, 1)), "2,1")
        self.assertEqual(canonical((C(1), C())), "1|")
        self.assertEqual(label_str((C(2), C(1, 1))), "2|1,1")

    def test_containers(self):
        """Test dict keys and nested lists."""
        data = canonical({"k": 1, C(1): [2, (3, 4)]})
        self.assertEqual(data, {"k": "1", "1": ["2", ["3", "4"]]})

    def test_objects_with_to_json(self):
        """Test delegation to to_json."""
        self.assertEqual(canonical(GrothendieckVector({C(2): 2})), {"2": "2"})

    def test_dumps_is_sorted(self):
        """Test key order in dumped JSON."""
        self.assertEqual(dumps({"b": 1, "a": 2}), '{\n  "a": "2",\n  "b": "1"\n}\n')


class TestCheckReport(unittest.TestCase):
    """Test recording and summaries."""

    def test_record_and_status(self):
        """Test pass/fail bookkeeping."""
        report = CheckReport("demo")
        self.assertTrue(report.passed)
        self.assertTrue(report.record("x", {"n": 1}, 1, 1))
        self.assertFalse(report.record("x", {"n": 2}, 1, 2))
        report.record("y", {}, "a", "b", equal=True)
        self.assertEqual(report.status, "fail")
        self.assertEqual(report.first_failure.inputs, {"n": 2})
        self.assertEqual(report.summary(), [
            {"identity": "x", "checked": 2, "failed": 1},
            {"identity": "y", "checked": 1, "failed": 0},
        ])

    def test_witness_filter(self):
        """Test that a witness filter prefers cells with distinct inputs."""
        report = CheckReport("demo", witness_filter=distinct_inputs("M", "N"))
        report.record("mackey", {"M": C(1), "N": C(1)}, 1, 2)
        report.record("mackey", {"M": C(1), "N": C(2)}, 1, 2)
        self.assertEqual(report.first_failure.inputs["N"], C(1))
        self.assertEqual(report.witness.inputs["N"], C(2))

    def test_witness_falls_back(self):
        """Test the fallback when no failure passes the filter."""
        report = CheckReport("demo", witness_filter=distinct_inputs("M", "N"))
        report.record("mackey", {"M": C(1), "N": C(1)}, 1, 2)
        self.assertIs(report.witness, report.first_failure)
        self.assertIsNone(CheckReport("empty").witness)

    def test_extend(self):
        """Test merging cells, notes and the witness filter."""
        first = CheckReport("demo")
        second = CheckReport("demo", witness_filter=distinct_inputs("a"))
        second.record("x", {"a": 1}, 0, 1)
        second.notes["n"] = 1
        first.extend(second)
        self.assertEqual(len(first.cells), 1)
        self.assertEqual(first.notes, {"n": 1})
        self.assertIsNotNone(first.witness_filter)

    def test_json_document(self):
        """Test the JSON layout with a witness."""
        report = CheckReport("demo", {"tower": "z2"})
        report.record("x", {"M": C(1)}, GrothendieckVector({C(1): 1}), GrothendieckVector())
        data = json.loads(report.to_json())
        self.assertEqual(data["status"], "fail")
        self.assertEqual(data["elapsed_ms"], "0")
        self.assertEqual(data["request"], {"tower": "z2"})
        self.assertEqual(data["witness"]["lhs"], {"1": "1"})
        self.assertEqual(data["cells"][0]["rhs"], {})

    def test_json_is_deterministic(self):
        """Test that two identical reports serialize to the same bytes."""
        def build():
            report = CheckReport("demo", {"b": 2, "a": 1})
            report.record("x", {"k": 1}, GrothendieckVector({C(2): 1, C(1, 1): 1}), None)
            return report.to_json()
        self.assertEqual(build(), build())


class TestReportWriter(unittest.TestCase):
    """Test rendering and saving."""

    def test_csv(self):
        """Test CSV rendering of a report."""
        report = CheckReport("demo")
        report.record("x", {"n": 1}, 1, 1)
        text = ReportWriter(output_format="csv").render_report(report)
        lines = text.splitlines()
        self.assertEqual(lines[0], "identity,inputs,lhs,rhs,equal")
        self.assertTrue(lines[1].endswith(",true"))

    def test_render_csv_values(self):
        """Test that None becomes empty and containers become JSON."""
        text = render_csv(["a", "b"], [[None, {"x": 1}]])
        self.assertEqual(text, 'a,b\n,"{""x"": ""1""}"\n')

    def test_table_json(self):
        """Test the table document."""
        text = ReportWriter().render_table({"op": "product"}, ["a", "value"],
                                           [[C(1), GrothendieckVector({C(2): 1})]])
        data = json.loads(text)
        self.assertEqual(data["rows"], [["1", {"2": "1"}]])
        self.assertEqual(data["header"], ["a", "value"])

    def test_timing(self):
        """Test that elapsed time is zero unless timing is requested."""
        self.assertEqual(ReportWriter().elapsed_ms(), 0)
        self.assertGreaterEqual(ReportWriter(timing=True).elapsed_ms(), 0)

    def test_save_to_file(self):
        """Test writing into a new directory."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "nested", "report.json")
            ReportWriter(path).save("{}\n")
            with open(path) as f:
                self.assertEqual(f.read(), "{}\n")

    def test_save_to_directory_fails(self):
        """Test that writing onto a directory raises OSError."""
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(OSError):
                ReportWriter(tmp).save("{}\n")


if __name__ == '__main__':
    unittest.main()
