# Copyright 2019 Google LLC
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

"""Tests for util.test_util."""

import unittest

from hypothesis import given
from hypothesis import settings

from ordiag.notation import term
from ordiag.util import od_data
from ordiag.util import test_util


class ParseTest(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(term.ONE, test_util.parse("f(0,0)"))

    def test_parse_error(self):
        with self.assertRaises(AssertionError):
            test_util.parse("f(0,")


def _has_collapse(t):
    return isinstance(t, od_data.D) or any(_has_collapse(c) for c in term.children(t))


class StrategyTest(unittest.TestCase):
    @settings(max_examples=100, deadline=None)
    @given(test_util.fragment_terms())
    def test_fragment_terms(self, t):
        self.assertTrue(term.is_canonical(t))
        self.assertFalse(_has_collapse(t))
        self.assertFalse(isinstance(t, (od_data.Omega, od_data.Pi)))

    @settings(max_examples=100, deadline=None)
    @given(test_util.collapse_free_terms())
    def test_collapse_free_terms(self, t):
        self.assertTrue(term.is_canonical(t))
        self.assertFalse(_has_collapse(t))

    @settings(max_examples=100, deadline=None)
    @given(test_util.index_sequences(max_n=6))
    def test_index_sequences(self, sequence):
        n, indices = sequence
        self.assertTrue(4 <= n <= 6)
        for index in indices:
            self.assertTrue(2 <= index <= n - 2)


if __name__ == "__main__":
    unittest.main()
