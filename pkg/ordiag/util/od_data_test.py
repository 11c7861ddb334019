# Copyright 2024 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Tests for util.od_data."""

import unittest

from ordiag.util import od_data
from ordiag.util.od_data import PI, Check


class QPartTest(unittest.TestCase):
    def test_sequence_protocol(self):
        quad = od_data.Quad(od_data.ZERO, PI, PI, 3)
        q = od_data.QPart((quad,))
        self.assertEqual(1, len(q))
        self.assertEqual([quad], list(q))
        self.assertIs(quad, q[-1])
        self.assertTrue(q)
        self.assertFalse(od_data.EMPTY_Q)


class ValidityReportTest(unittest.TestCase):
    def test_empty_report_is_valid(self):
        self.assertTrue(od_data.ValidityReport(PI).valid)

    def test_failures(self):
        bad = Check("body", False, "body too small")
        report = od_data.ValidityReport(PI, (Check("subterms", True), bad))
        self.assertFalse(report.valid)
        self.assertEqual([bad], report.failures())


class RopeDescriptorTest(unittest.TestCase):
    def test_bare(self):
        desc = od_data.RopeDescriptor(4, (PI,), (), ())
        self.assertEqual(0, desc.top)
        self.assertEqual(0, desc.knot_count)

    def test_knots(self):
        desc = od_data.RopeDescriptor(5, (PI,) * 4, (0, 1, 2), (3, 2))
        self.assertEqual(3, desc.top)
        self.assertEqual(2, desc.knot_count)


class OrderingTest(unittest.TestCase):
    def test_values(self):
        self.assertEqual(-1, od_data.Ordering.LT)
        self.assertEqual(od_data.Ordering.GT, od_data.Ordering(1))


if __name__ == "__main__":
    unittest.main()
