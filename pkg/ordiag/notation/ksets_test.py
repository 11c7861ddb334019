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

"""Tests for notation.ksets."""

import unittest

from ordiag.check import fixtures
from ordiag.notation import ksets
from ordiag.notation import term
from ordiag.util import error
from ordiag.util.od_data import EMPTY_Q, OMEGA, PI, ZERO


class KAllTest(unittest.TestCase):
    def test_zero(self):
        self.assertEqual(frozenset(), ksets.k_all(ZERO))

    def test_components(self):
        self.assertEqual(
            frozenset({OMEGA}), ksets.k_all(term.mk_sum([OMEGA, term.ONE]))
        )
        self.assertEqual(
            frozenset({OMEGA}), ksets.k_all(term.mk_phi(OMEGA, term.ONE))
        )
        self.assertEqual(frozenset(), ksets.k_all(term.nat(3)))
        self.assertEqual(
            frozenset({fixtures.TOP}), ksets.k_all(fixtures.TOP)
        )


class DSetTest(unittest.TestCase):
    def test_collapse_at_the_subscript(self):
        self.assertEqual(
            frozenset({fixtures.SMALL_TOP}), ksets.d_set(PI, fixtures.SMALL_TOP)
        )

    def test_follows_smaller_subscripts(self):
        self.assertEqual(
            frozenset({fixtures.SMALL_TOP}), ksets.d_set(PI, fixtures.SMALL_SECOND)
        )
        self.assertEqual(
            frozenset({fixtures.SMALL_SECOND}),
            ksets.d_set(fixtures.SMALL_TOP, fixtures.SMALL_SECOND),
        )

    def test_regular_atoms(self):
        self.assertEqual(frozenset(), ksets.d_set(PI, PI))
        self.assertEqual(frozenset(), ksets.d_set(PI, term.mk_rsucc(OMEGA)))

    def test_union_over_terms(self):
        below_omega = term.mk_d(OMEGA, EMPTY_Q, term.ONE)
        self.assertEqual(
            frozenset({below_omega}),
            ksets.d_set(OMEGA, [term.ONE, term.mk_sum([below_omega, term.ONE])]),
        )

    def test_non_regular_subscript(self):
        with self.assertRaises(error.TermError):
            ksets.d_set(term.ONE, fixtures.SMALL_TOP)


class BoundTest(unittest.TestCase):
    def test_b_at(self):
        self.assertEqual(term.ONE, ksets.b_at(PI, fixtures.SMALL_SECOND))
        self.assertEqual(ZERO, ksets.b_at(OMEGA, fixtures.SMALL_SECOND))

    def test_b_above(self):
        self.assertEqual(
            term.ONE, ksets.b_above(fixtures.SMALL_TOP, [fixtures.SMALL_TOP])
        )
        self.assertEqual(ZERO, ksets.b_above(PI, fixtures.SMALL_TOP))

    def test_b_above_at_a_knot(self):
        st_2 = fixtures.MERGED.q[0].nu
        self.assertEqual(
            fixtures.OMEGA_PLUS_TWO, ksets.b_above(fixtures.SECOND, [st_2])
        )

    def test_b_above_next_regular(self):
        successor = term.mk_rsucc(fixtures.SECOND)
        self.assertEqual(
            fixtures.OMEGA_ONE, ksets.b_above(successor, successor)
        )


class KAtTest(unittest.TestCase):
    def test_collapse_reaching_sigma(self):
        self.assertEqual(
            frozenset({fixtures.SMALL_TOP}), ksets.k_at(PI, fixtures.SMALL_TOP)
        )
        self.assertEqual(
            frozenset({fixtures.SMALL_SECOND}),
            ksets.k_at(fixtures.SMALL_TOP, fixtures.SMALL_SECOND),
        )

    def test_collapse_above_sigma_is_opened(self):
        self.assertEqual(frozenset(), ksets.k_at(OMEGA, fixtures.SMALL_TOP))

    def test_next_regular(self):
        self.assertEqual(frozenset(), ksets.k_at(PI, term.mk_rsucc(OMEGA)))

    def test_k_max(self):
        self.assertEqual(ZERO, ksets.k_max(fixtures.SMALL_TOP, fixtures.SMALL_TOP))
        self.assertEqual(
            fixtures.SMALL_TOP,
            ksets.k_max(PI, term.mk_sum([fixtures.SMALL_TOP, term.ONE])),
        )


class ComparisonHelperTest(unittest.TestCase):
    def test_all_below(self):
        self.assertTrue(ksets.all_below([term.ONE, OMEGA], PI))
        self.assertFalse(ksets.all_below([term.ONE, PI], PI))
        self.assertTrue(ksets.all_below([], ZERO))

    def test_some_at_least(self):
        self.assertTrue(ksets.some_at_least(OMEGA, [term.ONE, PI]))
        self.assertFalse(ksets.some_at_least(PI, [term.ONE, OMEGA]))
        self.assertFalse(ksets.some_at_least(ZERO, []))


if __name__ == "__main__":
    unittest.main()
