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

"""Bounded enumeration of diagrams, order axiom scans and descent samples."""

import dataclasses
import graphlib
import itertools
import logging
import random
from typing import Callable, Final, Optional, Tuple

from ordiag.notation import order
from ordiag.notation import printer
from ordiag.notation import term
from ordiag.notation import validity
from ordiag.util import error
from ordiag.util import od_data
from ordiag.util.od_data import Ordering

LOGGER: Final = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class EnumConfig:
    """Bounds for enumerate_valid.

    max_size bounds term.size; max_q_len is 0 (no Q parts) or 1 (the single
    quadruple (nu, p, sigma, N-1) a chain without merging produces).
    """

    N: int = 4
    max_size: int = 5
    subscript_seed: Tuple[od_data.Term, ...] = (od_data.OMEGA, od_data.PI)
    max_q_len: int = 1
    count_cap: int = 100_000

    def __post_init__(self):
        if self.max_size < 1:
            raise ValueError(f"max_size must be at least 1, got {self.max_size}")
        if self.N < 4:
            raise ValueError(f"N must be at least 4, got {self.N}")


@dataclasses.dataclass(frozen=True)
class Enumeration:
    terms: Tuple[od_data.Term, ...]
    truncated: bool = False


def canonical_key(t):
    """The enumeration order: by size, then by canonical spelling."""
    return term.size(t), printer.print_term(t)


class _Enumerator:
    """Builds terms size by size from the terms already built."""

    def __init__(self, n, seeds, max_q_len, fragment_only):
        self._n = n
        self._seeds = seeds
        self._max_q_len = max_q_len
        self._fragment_only = fragment_only
        self._by_size = {}

    def sized(self, size):
        return self._by_size.get(size, ())

    def _pool(self, max_size):
        return [t for size in range(1, max_size + 1) for t in self.sized(size)]

    def build(self, size):
        candidates = set()
        if size == 1:
            candidates.add(od_data.ZERO)
        if not self._fragment_only:
            candidates.update(s for s in self._seeds if term.size(s) == size)
        candidates.update(self._phis(size))
        candidates.update(self._sums(size))
        if not self._fragment_only:
            candidates.update(self._rsuccs(size))
            candidates.update(self._collapses(size))
        self._by_size[size] = sorted(candidates, key=canonical_key)
        return self._by_size[size]

    def _phis(self, size):
        for first_size in range(1, size - 1):
            for first in self.sized(first_size):
                for second in self.sized(size - 1 - first_size):
                    if term.mk_phi(first, second) == od_data.Phi(first, second):
                        yield od_data.Phi(first, second)

    def _sums(self, size):
        principals = sorted(
            (t for t in self._pool(size - 2) if term.is_principal(t)),
            key=order.sort_key(),
            reverse=True,
        )

        def extend(prefix, remaining):
            if remaining == 0:
                if len(prefix) >= 2:
                    yield od_data.Sum(tuple(prefix))
                return
            for part in principals:
                if term.size(part) <= remaining and (
                    not prefix or order.le(part, prefix[-1])
                ):
                    yield from extend(prefix + [part], remaining - term.size(part))

        yield from extend([], size - 1)

    def _rsuccs(self, size):
        for base in self.sized(size - 1):
            if term.is_regular(base) and not isinstance(base, od_data.Pi):
                yield od_data.RSucc(base)

    def _collapses(self, size):
        for sub_size in range(1, size - 1):
            for sub in self.sized(sub_size):
                if not term.is_regular(sub):
                    continue
                for body_size in range(1, size - sub_size):
                    q_size = size - 1 - sub_size - body_size
                    if q_size == 0:
                        for body in self.sized(body_size):
                            candidate = od_data.D(sub, od_data.EMPTY_Q, body)
                            if validity.is_valid(candidate, self._n):
                                yield candidate
                    elif self._max_q_len >= 1 and self._takes_quad(sub):
                        yield from self._collapses_with_quad(
                            sub, body_size, q_size - 1 - sub_size
                        )

    def _takes_quad(self, sub):
        return isinstance(sub, od_data.Pi) or term.is_dq(sub)

    def _collapses_with_quad(self, sub, body_size, nu_size):
        if nu_size < 1:
            return
        for nu in self.sized(nu_size):
            q = od_data.QPart((od_data.Quad(nu, od_data.PI, sub, self._n - 1),))
            for body in self.sized(body_size):
                candidate = od_data.D(sub, q, body)
                if validity.is_valid(candidate, self._n):
                    yield candidate


def _run(enumerator, max_size, count_cap=None):
    emitted = []
    for size in range(1, max_size + 1):
        built = enumerator.build(size)
        LOGGER.info("size %d: %d terms", size, len(built))
        emitted.extend(built)
        if count_cap is not None and len(emitted) > count_cap:
            LOGGER.warning("enumeration truncated at %d terms", count_cap)
            return Enumeration(tuple(emitted[:count_cap]), truncated=True)
    return Enumeration(tuple(emitted))


def enumerate_valid(cfg):
    """Returns every valid canonical term of size <= cfg.max_size, in order.

    Terms are built from Zero, the seed subscripts and the collapses emitted so
    far with sums, phi, next-regular and collapse; Q parts are limited to the
    single (nu, p, sigma, N-1) quadruple.  The result is ordered by
    canonical_key and is the same for equal configurations.
    """
    enumerator = _Enumerator(
        cfg.N, tuple(cfg.subscript_seed), cfg.max_q_len, fragment_only=False
    )
    return _run(enumerator, cfg.max_size, cfg.count_cap)


def fragment_terms(max_size):
    """Returns the canonical terms of size <= max_size built from 0, + and phi."""
    enumerator = _Enumerator(4, (), 0, fragment_only=True)
    return _run(enumerator, max_size).terms


@dataclasses.dataclass(frozen=True)
class AxiomReport:
    passed: bool
    pairs: int
    triples: int
    counterexample: Optional[str] = None


def _describe(kind, *terms):
    return kind + ": " + ", ".join(printer.print_term(t) for t in terms)


def order_axiom_scan(
    terms,
    comparator: Callable = order.cmp,
    exhaustive_limit: int = 200,
    samples: int = 20_000,
    seed: int = 0,
):
    """Checks that `comparator` is a strict total order on `terms`.

    Trichotomy and antisymmetry are checked on all pairs.  Transitivity is
    checked on all triples when there are at most `exhaustive_limit` terms and
    on `samples` random triples otherwise.
    """
    terms = list(dict.fromkeys(terms))
    above = {t: set() for t in terms}
    pairs = 0
    for a, b in itertools.product(terms, repeat=2):
        pairs += 1
        result = comparator(a, b)
        if result not in (Ordering.LT, Ordering.EQ, Ordering.GT):
            return AxiomReport(False, pairs, 0, _describe("trichotomy", a, b))
        if (result == Ordering.EQ) != (a == b):
            return AxiomReport(False, pairs, 0, _describe("equality", a, b))
        if comparator(b, a) != Ordering(-result):
            return AxiomReport(False, pairs, 0, _describe("antisymmetry", a, b))
        if result == Ordering.LT:
            above[a].add(b)

    if len(terms) <= exhaustive_limit:
        triples = 0
        for a in terms:
            for b in above[a]:
                triples += len(above[b])
                missing = above[b] - above[a]
                if missing:
                    c = min(missing, key=canonical_key)
                    return AxiomReport(
                        False, pairs, triples, _describe("transitivity", a, b, c)
                    )
        return AxiomReport(True, pairs, triples)

    rng = random.Random(seed)
    for count in range(1, samples + 1):
        a, b, c = (rng.choice(terms) for _ in range(3))
        if b in above[a] and c in above[b] and c not in above[a]:
            return AxiomReport(False, pairs, count, _describe("transitivity", a, b, c))
    return AxiomReport(True, pairs, samples)


def topological_check(terms, comparator: Callable = order.cmp):
    """Returns True if the strict relation of `comparator` on `terms` is acyclic."""
    sorter = graphlib.TopologicalSorter()
    for a in terms:
        sorter.add(a)
        for b in terms:
            if comparator(b, a) == Ordering.LT:
                sorter.add(a, b)
    try:
        sorter.prepare()
    except graphlib.CycleError:
        return False
    return True


def _proper_subterms(t):
    stack = list(term.children(t))
    seen = set()
    while stack:
        current = stack.pop()
        if current in seen:
            continue
        seen.add(current)
        stack.extend(term.children(current))
    return seen


def _smaller_moves(t):
    moves = {od_data.ZERO} | _proper_subterms(t)
    if isinstance(t, od_data.Sum):
        moves.add(term.mk_sum(t.parts[:-1]))
    return [m for m in moves if order.lt(m, t)]


def descent_sample(seed, start, max_steps):
    """Returns a strictly decreasing sequence of terms beginning at `start`.

    Each step moves to a random smaller subterm, a shorter sum or Zero.  The
    walk stops at Zero or after `max_steps` steps.
    """
    rng = random.Random(seed)
    sequence = [start]
    current = start
    for _ in range(max_steps):
        if isinstance(current, od_data.Zero):
            break
        step = rng.choice(sorted(_smaller_moves(current), key=canonical_key))
        if not order.lt(step, current):
            raise error.OrderError(
                f"descent step {printer.print_term(step)} is not below "
                f"{printer.print_term(current)}"
            )
        LOGGER.debug("descent %s", printer.print_term(step))
        sequence.append(step)
        current = step
    return sequence
