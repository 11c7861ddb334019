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

"""Named property suites over enumerated and generated diagrams.

Each suite returns a SuiteResult; a suite fails on its first counterexample,
which is reported in printed form.  All randomness is drawn from generators
seeded with SelftestConfig.seed and the suite name.
"""

import dataclasses
import functools
import itertools
import logging
import random
import string
from typing import Final, Optional, Tuple

from ordiag.check import enumeration
from ordiag.check import fixtures
from ordiag.check import veblen_oracle
from ordiag.front_end import textio
from ordiag.notation import chain
from ordiag.notation import ksets
from ordiag.notation import order
from ordiag.notation import printer
from ordiag.notation import qpart
from ordiag.notation import term
from ordiag.notation import validity
from ordiag.util import error
from ordiag.util import od_data

LOGGER: Final = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class SelftestConfig:
    seed: int = 0
    max_size: int = 5
    fragment_size: int = 7
    sizes: Tuple[int, ...] = (4, 5)
    monotone_pairs: int = 500
    body_bound_triples: int = 500
    descriptors: int = 100
    max_sigmas: int = 4
    in_set_samples: int = 10_000
    fuzz_inputs: int = 100_000
    descent_runs: int = 10_000
    descent_steps: int = 50


@dataclasses.dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    cases: int
    counterexample: Optional[str] = None


class _Failure(Exception):
    pass


class _Context:
    """Shared, lazily computed inputs for the suites."""

    def __init__(self, cfg):
        self.cfg = cfg

    def rng(self, name):
        return random.Random(f"{self.cfg.seed}:{name}")

    @functools.cached_property
    def enumerated(self):
        config = enumeration.EnumConfig(N=4, max_size=self.cfg.max_size)
        return enumeration.enumerate_valid(config).terms

    @functools.cached_property
    def generated(self):
        """(descriptor, inputs, rho) triples for every N in cfg.sizes."""
        rng = self.rng("descriptors")
        result = []
        per_size = max(1, self.cfg.descriptors // len(self.cfg.sizes))
        for n in self.cfg.sizes:
            for _ in range(per_size):
                desc, inputs = chain.random_descriptor(rng, n, self.cfg.max_sigmas)
                rho, report = chain.synth(desc, inputs)
                result.append((desc, inputs, rho, report))
        return result

    def diagrams_with_q(self):
        """Yields (term, N) for every enumerated or generated collapse in D^Q."""
        for t in self.enumerated:
            if term.is_dq(t):
                yield t, 4
        for desc, _, rho, _ in self.generated:
            for t in desc.sigmas[1:] + (rho,):
                yield t, desc.N


def _show(*terms):
    return ", ".join(printer.print_term(t) for t in terms)


def _require(condition, message):
    if not condition:
        raise _Failure(message)


def _order_axioms(ctx):
    report = enumeration.order_axiom_scan(ctx.enumerated)
    _require(report.passed, report.counterexample)
    _require(
        enumeration.topological_check(ctx.enumerated[:200]),
        "the strict order has a cycle",
    )
    return report.pairs


def _fragment_oracle(ctx):
    terms = enumeration.fragment_terms(ctx.cfg.fragment_size)
    cases = 0
    for a, b in itertools.product(terms, repeat=2):
        cases += 1
        expected = veblen_oracle.oracle_veblen_cmp(a, b)
        actual = order.cmp(a, b)
        _require(actual == expected, f"{_show(a, b)}: {actual.name} != {expected.name}")
    return cases


def _collapse_bound(ctx):
    cases = 0
    for t in ctx.enumerated:
        _require(validity.is_valid(t, 4), f"enumerated invalid term {_show(t)}")
        if isinstance(t, od_data.D):
            cases += 1
            _require(order.lt(t, t.sub), f"{_show(t)} is not below its subscript")
    return cases


def _collapse_monotone(ctx):
    rng = ctx.rng("collapse_monotone")
    regulars = [t for t in ctx.enumerated if term.is_regular(t)]
    bodies = list(ctx.enumerated)
    cases = 0
    for _ in range(ctx.cfg.monotone_pairs * 50):
        if cases >= ctx.cfg.monotone_pairs:
            break
        kappa, tau = rng.choice(regulars), rng.choice(regulars)
        low, high = sorted(
            (rng.choice(bodies), rng.choice(bodies)), key=order.sort_key()
        )
        if not order.lt(kappa, tau) or not order.lt(low, high):
            continue
        if not all(
            order.lt(ksets.b_above(kappa, [tau, alpha]), alpha) for alpha in (low, high)
        ):
            continue
        cases += 1
        left = term.mk_d(tau, od_data.EMPTY_Q, low)
        right = term.mk_d(tau, od_data.EMPTY_Q, high)
        _require(
            validity.is_valid(left, 4) and validity.is_valid(right, 4),
            f"collapse of {_show(low)} or {_show(high)} below {_show(tau)} invalid",
        )
        _require(order.lt(left, right), f"{_show(left, right)} out of order")
    return cases


def _body_bound(ctx):
    rng = ctx.rng("body_bound")
    below_pi = [
        t
        for t in ctx.enumerated
        if term.is_regular(t) and order.lt(t, od_data.PI)
    ]
    terms = list(ctx.enumerated)
    cases = 0
    for _ in range(ctx.cfg.body_bound_triples * 50):
        if cases >= ctx.cfg.body_bound_triples:
            break
        alpha, beta, sigma = rng.choice(terms), rng.choice(terms), rng.choice(below_pi)
        if validity.body_bound_violation(alpha, beta) is not None:
            continue
        cases += 1
        try:
            gamma = validity.gamma_bound(alpha, beta, sigma)
        except error.ValidityError as e:
            raise _Failure(f"{_show(alpha, beta, sigma)}: {e}") from e
        widened = term.mk_sum([gamma, ksets.k_max(sigma, alpha)])
        _require(
            order.lt(ksets.b_above(sigma, [sigma, gamma, widened]), gamma),
            f"{_show(alpha, beta, sigma)}: bound fails for {_show(gamma)}",
        )
        for body in (gamma, widened):
            report = validity.check_d(sigma, od_data.EMPTY_Q, body, 4)
            _require(
                all(c.passed for c in report.checks if c.label == "body"),
                f"collapse of {_show(body)} below {_show(sigma)} fails the body bound",
            )
    return cases


def _rope_laws(ctx):
    cases = 0
    for desc, inputs, rho, report in ctx.generated:
        cases += 1
        laws = chain.verify_rope_laws(desc)
        if not laws.valid:
            shown = textio.print_descriptor(desc, inputs)
            raise _Failure(f"{laws.failures()[0].detail} for\n{shown}")
        if not report.valid:
            failure = report.failures()[0]
            raise _Failure(
                f"synthesized {_show(rho)} invalid: {failure.label} {failure.detail}"
            )
    return cases


def _worked_example(ctx):
    rho, report = chain.synth(fixtures.MERGE_ROPE, fixtures.MERGE_INPUTS)
    _require(report.valid, "the merged collapse is invalid")
    _require(rho == fixtures.MERGED, f"synthesized {_show(rho)}")
    _require(qpart.in_set(rho) == {2, 3}, f"In = {sorted(qpart.in_set(rho))}")
    _require(qpart.pd(rho, 3) == fixtures.TOP, "pd_3 is not the top collapse")
    view = qpart.derive(rho, 2)
    _require(
        view.rg == view.pd == fixtures.SECOND, "rg_2 and pd_2 are not the subscript"
    )
    resumed, report = chain.synth(fixtures.RESUMED_ROPE, fixtures.RESUMED_INPUTS)
    _require(report.valid and resumed == fixtures.RESUMED, "the resumed collapse")
    return 2


def _in_set_equivalence(ctx):
    rng = ctx.rng("in_set_equivalence")
    for _ in range(ctx.cfg.in_set_samples):
        n = rng.randint(4, 8)
        knots = rng.randint(0, 8)
        indices = tuple(rng.randint(2, n - 2) for _ in range(knots))
        desc = chain.index_rope(n, indices)
        expected = chain.in_from_first_occurrences(indices, n)
        _require(
            chain.in_from_rope(desc) == expected,
            f"N={n} indices={list(indices)}: {sorted(chain.in_from_rope(desc))}",
        )
    return ctx.cfg.in_set_samples


def _st_decrease(ctx):
    cases = 0
    for desc, inputs, rho, _ in ctx.generated:
        cases += 1
        path = desc.sigmas[1:] + (rho,)
        _require(
            chain.st_decreases(path, desc.N),
            f"st_{desc.N - 1} does not decrease along\n"
            + textio.print_descriptor(desc, inputs),
        )
    return cases


_FUZZ_ALPHABET = "0Wpfd+^()[],;:# 123" + string.ascii_letters + "\t\n\x00\xff"


def _round_trip(ctx):
    cases = 0
    for t in ctx.enumerated:
        cases += 1
        for pretty in (False, True):
            text = printer.print_term(t, pretty=pretty)
            parsed, errors = textio.parse_term(text)
            _require(not errors and parsed == t, f"{text!r} reads back as {parsed!r}")
    rng = ctx.rng("fuzz")
    for _ in range(ctx.cfg.fuzz_inputs):
        cases += 1
        text = "".join(
            rng.choice(_FUZZ_ALPHABET) for _ in range(rng.randint(0, 24))
        )
        try:
            parsed, errors = textio.parse_term(text)
        except Exception as e:  # pylint:disable=broad-except
            raise _Failure(f"parser crashed on {text!r}: {e!r}") from e
        _require((parsed is None) == bool(errors), f"inconsistent result on {text!r}")
        if parsed is not None:
            _require(term.is_canonical(parsed), f"{text!r} parsed non-canonically")
            again, _ = textio.parse_term(printer.print_term(parsed))
            _require(again == parsed, f"{text!r} does not round-trip")
    return cases


def _containment(ctx):
    cases = 0
    for t, n in ctx.diagrams_with_q():
        for i in range(2, n - 1):
            cases += 1
            narrow = set(order.pd_chain(t, i + 1))
            wide = set(order.pd_chain(t, i))
            _require(narrow <= wide, f"<_{i + 1} is not inside <_{i} at {_show(t)}")
    return cases


def _pd_chain_linear(ctx):
    cases = 0
    for t, n in ctx.diagrams_with_q():
        for i in range(2, n):
            cases += 1
            walk = [t] + order.pd_chain(t, i)
            for low, high in zip(walk, walk[1:]):
                _require(
                    order.lt(low, high) and order.prec_i(low, high, i),
                    f"pd_{i} chain of {_show(t)} is not increasing at {_show(low)}",
                )
    return cases


def _index_chain(ctx):
    cases = 0
    for t, _ in ctx.diagrams_with_q():
        for i in sorted(qpart.in_set(t)):
            cases += 1
            kappa = qpart.rg(t, i)
            _require(order.prec_i(t, kappa, i), f"{_show(t)} does not reach rg_{i}")
            walk = order.pd_chain(t, i)
            own = qpart.in_j(t, i)
            for sigma, tau in itertools.combinations(walk, 2):
                _require(
                    own != qpart.in_j(tau, i) or own == qpart.in_j(sigma, i),
                    f"in_{i} of {_show(sigma)} breaks the run from {_show(t)} "
                    f"to {_show(tau)}",
                )
            for tau in walk[: walk.index(kappa)]:
                inner = qpart.rg(tau, i)
                _require(
                    inner is not None and order.prec_eq_i(inner, kappa, i),
                    f"rg_{i} of {_show(tau)} lies beyond rg_{i} of {_show(t)}",
                )
    return cases


def _descent(ctx):
    rng = ctx.rng("descent")
    starts = list(ctx.enumerated)
    for run in range(ctx.cfg.descent_runs):
        start = rng.choice(starts)
        try:
            sample = enumeration.descent_sample(
                rng.randrange(2**32), start, ctx.cfg.descent_steps
            )
        except error.OrderError as e:
            raise _Failure(f"run {run} from {_show(start)}: {e}") from e
        for high, low in zip(sample, sample[1:]):
            _require(order.lt(low, high), f"run {run}: {_show(low, high)} not smaller")
    return ctx.cfg.descent_runs


SUITES = {
    "order_axioms": _order_axioms,
    "fragment_oracle": _fragment_oracle,
    "collapse_bound": _collapse_bound,
    "collapse_monotone": _collapse_monotone,
    "body_bound": _body_bound,
    "rope_laws": _rope_laws,
    "worked_example": _worked_example,
    "in_set_equivalence": _in_set_equivalence,
    "st_decrease": _st_decrease,
    "round_trip": _round_trip,
    "containment": _containment,
    "pd_chain_linear": _pd_chain_linear,
    "index_chain": _index_chain,
    "descent": _descent,
}


def run_suites(cfg, names=None):
    """Runs the named suites (all of them by default) and returns SuiteResults."""
    ctx = _Context(cfg)
    results = []
    for name in names or SUITES:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
        LOGGER.info("running %s", name)
        try:
            cases = SUITES[name](ctx)
        except _Failure as e:
            LOGGER.info("%s failed: %s", name, e)
            results.append(SuiteResult(name, False, 0, str(e)))
            continue
        LOGGER.info("%s passed %d cases", name, cases)
        results.append(SuiteResult(name, True, cases))
    return results
