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

"""Tests for notation.order."""

import unittest

from hypothesis import given
from hypothesis import settings

from ordiag.check import fixtures
from ordiag.notation import order
from ordiag.notation import term
from ordiag.notation import validity
from ordiag.util import error
from ordiag.util import test_util
from ordiag.util.od_data import EMPTY_Q, OMEGA, PI, ZERO, Ordering

_EPSILON_ZERO = term.mk_phi(term.ONE, ZERO)


class CmpTest(unittest.TestCase):
    def assert_below(self, low, high):
        self.assertEqual(Ordering.LT, order.cmp(low, high))
        self.assertEqual(Ordering.GT, order.cmp(high, low))

    def test_equal(self):
        self.assertEqual(Ordering.EQ, order.cmp(fixtures.MERGED, fixtures.MERGED))

    def test_zero_is_least(self):
        for t in (term.ONE, OMEGA, PI, fixtures.SMALL_TOP):
            self.assert_below(ZERO, t)

    def test_naturals(self):
        self.assert_below(term.ONE, term.nat(2))
        self.assert_below(term.nat(2), term.nat(3))
        self.assert_below(term.nat(3), term.OMEGA_POWER_ONE)

    def test_sum_prefix_is_smaller(self):
        omega_plus_one = term.mk_sum([term.OMEGA_POWER_ONE, term.ONE])
        self.assert_below(term.OMEGA_POWER_ONE, omega_plus_one)
        self.assert_below(omega_plus_one, term.mk_sum([term.OMEGA_POWER_ONE] * 2))

    def test_veblen(self):
        self.assert_below(term.OMEGA_POWER_ONE, _EPSILON_ZERO)
        self.assert_below(
            _EPSILON_ZERO, term.omega_power(term.mk_sum([_EPSILON_ZERO, term.ONE]))
        )
        self.assert_below(_EPSILON_ZERO, term.mk_phi(term.ONE, term.ONE))

    def test_phi_against_strongly_critical(self):
        self.assert_below(_EPSILON_ZERO, OMEGA)
        self.assert_below(OMEGA, term.mk_phi(OMEGA, term.ONE))
        self.assert_below(term.mk_phi(OMEGA, term.ONE), term.mk_rsucc(OMEGA))

    def test_regulars(self):
        self.assert_below(OMEGA, term.mk_rsucc(OMEGA))
        self.assert_below(term.mk_rsucc(OMEGA), term.mk_rsucc(term.mk_rsucc(OMEGA)))
        self.assert_below(term.mk_rsucc(term.mk_rsucc(OMEGA)), PI)

    def test_collapse_is_below_its_subscript(self):
        self.assert_below(term.mk_d(PI, EMPTY_Q, term.ONE), PI)
        self.assert_below(fixtures.SMALL_TOP, PI)
        self.assert_below(fixtures.SECOND, fixtures.TOP)
        self.assert_below(fixtures.MERGED, fixtures.SECOND)

    def test_collapses_below_next_regular_lie_between(self):
        below = term.mk_d(term.mk_rsucc(OMEGA), EMPTY_Q, term.ONE)
        self.assert_below(OMEGA, below)
        self.assert_below(below, term.mk_rsucc(OMEGA))

    def test_collapses_compare_by_body(self):
        self.assert_below(
            term.mk_d(PI, EMPTY_Q, term.ONE), term.mk_d(PI, EMPTY_Q, term.nat(2))
        )
        self.assert_below(
            term.mk_d(PI, EMPTY_Q, term.ONE), term.mk_d(PI, EMPTY_Q, OMEGA)
        )

    def test_omega_collapses_are_below_pi_collapses(self):
        self.assert_below(
            term.mk_d(OMEGA, EMPTY_Q, term.nat(3)),
            term.mk_d(PI, EMPTY_Q, term.ONE),
        )

    def test_nested_collapse_is_placed_by_its_coefficients(self):
        one = term.ONE
        lower = term.mk_d(PI, EMPTY_Q, term.mk_sum([PI, one]))
        inner = term.mk_d(PI, EMPTY_Q, term.mk_sum([PI, one, one]))
        outer = term.mk_d(PI, EMPTY_Q, inner)
        for t in (lower, inner, outer):
            self.assertTrue(validity.is_valid(t, fixtures.N))
        # outer has the smaller body, but its coefficient inner is above lower.
        self.assert_below(lower, inner)
        self.assert_below(lower, outer)
        self.assert_below(inner, outer)

    def test_collapse_against_next_regular(self):
        x = term.mk_d(OMEGA, EMPTY_Q, term.ONE)
        above_x = term.mk_rsucc(x)
        below = term.mk_d(above_x, EMPTY_Q, term.ONE)
        self.assert_below(x, above_x)
        self.assert_below(above_x, OMEGA)
        self.assert_below(below, above_x)

    def test_collapses_on_unrelated_subscripts(self):
        x = term.mk_d(OMEGA, EMPTY_Q, term.ONE)
        below = term.mk_d(term.mk_rsucc(x), EMPTY_Q, term.ONE)
        # Neither subscript is below the other collapse.
        self.assert_below(below, OMEGA)
        self.assert_below(x, term.mk_rsucc(x))
        self.assert_below(x, below)

    def test_cmp_qparts(self):
        self.assertEqual(
            Ordering.LT, order.cmp_qparts(EMPTY_Q, fixtures.SMALL_TOP.q)
        )
        self.assertEqual(
            Ordering.LT, order.cmp_qparts(fixtures.SMALL_TOP.q, fixtures.TOP.q)
        )
        self.assertEqual(
            Ordering.EQ, order.cmp_qparts(fixtures.TOP.q, fixtures.TOP.q)
        )


class HelperTest(unittest.TestCase):
    def test_lt_le(self):
        self.assertTrue(order.lt(term.ONE, OMEGA))
        self.assertFalse(order.lt(OMEGA, OMEGA))
        self.assertTrue(order.le(OMEGA, OMEGA))
        self.assertFalse(order.le(PI, OMEGA))

    def test_term_max(self):
        self.assertEqual(ZERO, order.term_max([]))
        self.assertEqual(OMEGA, order.term_max([term.ONE, OMEGA, ZERO]))

    def test_sort_key(self):
        self.assertEqual(
            [ZERO, term.ONE, OMEGA, PI],
            sorted([PI, OMEGA, ZERO, term.ONE], key=order.sort_key()),
        )

    def test_checked_cmp(self):
        self.assertEqual(
            Ordering.LT,
            order.checked_cmp(term.mk_d(PI, EMPTY_Q, term.ONE), PI, fixtures.N),
        )

    def test_checked_cmp_rejects_invalid_diagrams(self):
        with self.assertRaises(error.OrderError):
            order.checked_cmp(term.mk_d(PI, EMPTY_Q, ZERO), PI, fixtures.N)


class ReachabilityTest(unittest.TestCase):
    def test_prec(self):
        self.assertTrue(order.prec(fixtures.SMALL_TOP, PI))
        self.assertTrue(order.prec(fixtures.SMALL_SECOND, PI))
        self.assertFalse(order.prec(PI, fixtures.SMALL_TOP))
        self.assertFalse(order.prec(fixtures.SMALL_TOP, fixtures.SMALL_TOP))
        self.assertTrue(order.prec_eq(fixtures.SMALL_TOP, fixtures.SMALL_TOP))

    def test_pd_chain(self):
        self.assertEqual([PI], order.pd_chain(fixtures.SMALL_TOP, 3))
        self.assertEqual(
            [fixtures.SMALL_TOP, PI], order.pd_chain(fixtures.SMALL_SECOND, 3)
        )
        self.assertEqual([], order.pd_chain(term.mk_d(OMEGA, EMPTY_Q, term.ONE), 3))

    def test_pd_chain_through_a_knot(self):
        self.assertEqual(
            [fixtures.SECOND, fixtures.TOP, PI], order.pd_chain(fixtures.MERGED, 2)
        )
        self.assertEqual([fixtures.TOP, PI], order.pd_chain(fixtures.MERGED, 3))

    def test_prec_i(self):
        self.assertTrue(order.prec_i(fixtures.SMALL_SECOND, PI, 3))
        self.assertFalse(order.prec_i(fixtures.SMALL_TOP, fixtures.SMALL_TOP, 3))
        self.assertTrue(order.prec_eq_i(fixtures.SMALL_TOP, fixtures.SMALL_TOP, 3))
        self.assertFalse(order.prec_i(fixtures.MERGED, fixtures.SECOND, 3))
        self.assertTrue(order.prec_i(fixtures.MERGED, fixtures.SECOND, 2))


class OrderPropertyTest(unittest.TestCase):
    @settings(max_examples=200, deadline=None)
    @given(test_util.collapse_free_terms(), test_util.collapse_free_terms())
    def test_antisymmetry(self, a, b):
        self.assertEqual(order.cmp(a, b), Ordering(-order.cmp(b, a)))
        self.assertEqual(a == b, order.cmp(a, b) == Ordering.EQ)

    @settings(max_examples=200, deadline=None)
    @given(
        test_util.collapse_free_terms(),
        test_util.collapse_free_terms(),
        test_util.collapse_free_terms(),
    )
    def test_transitivity(self, a, b, c):
        a, b, c = sorted([a, b, c], key=order.sort_key())
        self.assertTrue(order.le(a, b))
        self.assertTrue(order.le(b, c))
        self.assertTrue(order.le(a, c))

    @settings(max_examples=100, deadline=None)
    @given(test_util.collapse_free_terms())
    def test_sum_with_one_is_larger(self, a):
        self.assertTrue(order.lt(a, term.mk_sum([a, term.ONE])))


if __name__ == "__main__":
    unittest.main()
