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

"""Tests for check.enumeration."""

import unittest

from ordiag.check import enumeration
from ordiag.check import fixtures
from ordiag.notation import order
from ordiag.notation import term
from ordiag.notation import validity
from ordiag.util.od_data import EMPTY_Q, OMEGA, PI, ZERO, Ordering


def _cyclic(a, b, c):
    """Returns a comparator with a < b < c < a."""
    below = {(a, b), (b, c), (c, a)}

    def comparator(x, y):
        if x == y:
            return Ordering.EQ
        return Ordering.LT if (x, y) in below else Ordering.GT

    return comparator


class EnumerateValidTest(unittest.TestCase):
    def test_size_one(self):
        result = enumeration.enumerate_valid(enumeration.EnumConfig(max_size=1))
        self.assertEqual((ZERO, OMEGA, PI), result.terms)
        self.assertFalse(result.truncated)

    def test_first_collapse(self):
        collapse = term.mk_d(PI, EMPTY_Q, term.ONE)
        self.assertNotIn(
            collapse,
            enumeration.enumerate_valid(enumeration.EnumConfig(max_size=4)).terms,
        )
        self.assertIn(
            collapse,
            enumeration.enumerate_valid(enumeration.EnumConfig(max_size=5)).terms,
        )

    def test_seed(self):
        terms = enumeration.enumerate_valid(
            enumeration.EnumConfig(max_size=5, subscript_seed=(PI,))
        ).terms
        self.assertNotIn(OMEGA, terms)
        self.assertIn(term.mk_d(PI, EMPTY_Q, term.ONE), terms)

    def test_terms_are_valid_and_ordered(self):
        terms = enumeration.enumerate_valid(enumeration.EnumConfig(max_size=5)).terms
        self.assertEqual(list(terms), sorted(terms, key=enumeration.canonical_key))
        self.assertEqual(len(terms), len(set(terms)))
        for t in terms:
            self.assertTrue(validity.is_valid(t, 4), t)
            self.assertTrue(term.is_canonical(t), t)

    def test_deterministic(self):
        config = enumeration.EnumConfig(max_size=5)
        self.assertEqual(
            enumeration.enumerate_valid(config), enumeration.enumerate_valid(config)
        )

    def test_count_cap(self):
        result = enumeration.enumerate_valid(
            enumeration.EnumConfig(max_size=3, count_cap=2)
        )
        self.assertTrue(result.truncated)
        self.assertEqual((ZERO, OMEGA), result.terms)

    def test_bad_config(self):
        with self.assertRaises(ValueError):
            enumeration.EnumConfig(max_size=0)
        with self.assertRaises(ValueError):
            enumeration.EnumConfig(N=3)


class FragmentTermsTest(unittest.TestCase):
    def test_small(self):
        self.assertEqual((ZERO, term.ONE), enumeration.fragment_terms(4))

    def test_contents(self):
        terms = enumeration.fragment_terms(7)
        self.assertIn(term.OMEGA_POWER_ONE, terms)
        self.assertIn(term.nat(2), terms)
        self.assertIn(term.mk_phi(term.ONE, ZERO), terms)
        self.assertNotIn(OMEGA, terms)


class OrderAxiomScanTest(unittest.TestCase):
    def test_enumerated_terms(self):
        terms = enumeration.enumerate_valid(enumeration.EnumConfig(max_size=4)).terms
        report = enumeration.order_axiom_scan(terms)
        self.assertTrue(report.passed, report.counterexample)
        self.assertEqual(len(terms) ** 2, report.pairs)

    def test_fixtures(self):
        report = enumeration.order_axiom_scan(
            [
                PI,
                fixtures.TOP,
                fixtures.SECOND,
                fixtures.MERGED,
                fixtures.RESUMED,
                fixtures.SMALL_TOP,
                fixtures.SMALL_SECOND,
            ]
        )
        self.assertTrue(report.passed, report.counterexample)

    def test_sampled_transitivity(self):
        terms = enumeration.fragment_terms(9)
        report = enumeration.order_axiom_scan(
            terms, exhaustive_limit=0, samples=500, seed=3
        )
        self.assertTrue(report.passed)
        self.assertEqual(500, report.triples)

    def test_broken_antisymmetry(self):
        def always_below(a, b):
            return Ordering.EQ if a == b else Ordering.LT

        report = enumeration.order_axiom_scan([ZERO, OMEGA], always_below)
        self.assertFalse(report.passed)
        self.assertTrue(report.counterexample.startswith("antisymmetry: "))

    def test_broken_transitivity(self):
        report = enumeration.order_axiom_scan(
            [ZERO, OMEGA, PI], _cyclic(ZERO, OMEGA, PI)
        )
        self.assertFalse(report.passed)
        self.assertTrue(report.counterexample.startswith("transitivity: "))


class TopologicalCheckTest(unittest.TestCase):
    def test_acyclic(self):
        terms = enumeration.enumerate_valid(enumeration.EnumConfig(max_size=3)).terms
        self.assertTrue(enumeration.topological_check(terms))

    def test_cycle(self):
        self.assertFalse(
            enumeration.topological_check(
                [ZERO, OMEGA, PI], _cyclic(ZERO, OMEGA, PI)
            )
        )


class DescentSampleTest(unittest.TestCase):
    def test_zero(self):
        self.assertEqual([ZERO], enumeration.descent_sample(0, ZERO, 10))

    def test_one(self):
        self.assertEqual([term.ONE, ZERO], enumeration.descent_sample(5, term.ONE, 10))

    def test_strictly_decreasing(self):
        for seed in range(20):
            sequence = enumeration.descent_sample(seed, fixtures.RESUMED, 50)
            self.assertEqual(fixtures.RESUMED, sequence[0])
            self.assertEqual(ZERO, sequence[-1])
            for high, low in zip(sequence, sequence[1:]):
                self.assertTrue(order.lt(low, high))

    def test_step_limit(self):
        sequence = enumeration.descent_sample(1, fixtures.MERGED, 1)
        self.assertEqual(2, len(sequence))

    def test_deterministic(self):
        self.assertEqual(
            enumeration.descent_sample(9, fixtures.MERGED, 50),
            enumeration.descent_sample(9, fixtures.MERGED, 50),
        )


if __name__ == "__main__":
    unittest.main()
