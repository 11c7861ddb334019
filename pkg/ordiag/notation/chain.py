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

"""Rope descriptors: the index arithmetic of merged chains and Q part synthesis.

A rope descriptor lists subscripts sigma_0 (the root) ... sigma_n, each
sigma_{p+1} a collapse below sigma_p, with knot numbers n_0 < ... < n_l = n-1
and knot indices i_0 ... i_{l-1}.  From these alone the Q part of a new
collapse rho = d_{sigma_n}^q alpha is determined: which indices are in In(rho),
and the values pd_i(rho), rg_i(rho).  The st values are caller-supplied.
"""

import logging
from typing import Final

from ordiag.notation import ksets
from ordiag.notation import order
from ordiag.notation import qpart
from ordiag.notation import term
from ordiag.notation import validity
from ordiag.util import error
from ordiag.util import od_data
from ordiag.util.od_data import Check

LOGGER: Final = logging.getLogger(__name__)


def validate_descriptor(desc):
    """Raises DescriptorError unless `desc` meets the structural invariants."""
    if desc.N < 4:
        raise error.DescriptorError(f"N must be at least 4, got {desc.N}")
    if not desc.sigmas or not term.is_regular(desc.sigmas[0]):
        raise error.DescriptorError("sigma_0 must be a regular diagram")
    for p in range(desc.top):
        nxt = desc.sigmas[p + 1]
        if not isinstance(nxt, od_data.D) or nxt.sub != desc.sigmas[p]:
            raise error.DescriptorError(
                f"sigma_{p + 1} must be a collapse with subscript sigma_{p}"
            )
    knots = desc.knot_numbers
    if desc.top == 0:
        if knots or desc.knot_indices:
            raise error.DescriptorError("a rope without collapses has no knots")
        return
    if (
        not knots
        or knots[0] < 0
        or knots[-1] != desc.top - 1
        or any(a >= b for a, b in zip(knots, knots[1:]))
    ):
        raise error.DescriptorError(
            f"knot numbers {list(knots)} must increase and end at {desc.top - 1}"
        )
    if len(desc.knot_indices) != desc.knot_count:
        raise error.DescriptorError(
            f"expected {desc.knot_count} knot indices, got {len(desc.knot_indices)}"
        )
    for index in desc.knot_indices:
        if not 2 <= index <= desc.N - 2:
            raise error.DescriptorError(
                f"knot index {index} out of range [2, {desc.N - 2}]"
            )


def m_index(desc, i):
    """Returns m(i): the largest m <= l with i <= i_p for every p < m."""
    if not 2 <= i < desc.N:
        raise error.DescriptorError(f"index {i} out of range [2, {desc.N - 1}]")
    m = 0
    while m < desc.knot_count and i <= desc.knot_indices[m]:
        m += 1
    return m


def in_from_rope(desc):
    """Returns In(rho) for the collapse synthesized from `desc`."""
    result = {desc.N - 1}
    for i in range(2, desc.N - 1):
        if i in desc.knot_indices[: m_index(desc, i)]:
            result.add(i)
    return frozenset(result)


def index_rope(n, indices):
    """Returns a descriptor carrying only the knot indices `indices`.

    Only the index arithmetic (m_index, in_from_rope, resolvent_level) applies
    to it; its subscripts are placeholders.
    """
    indices = tuple(indices)
    return od_data.RopeDescriptor(
        N=n,
        sigmas=(od_data.PI,) * (len(indices) + 2),
        knot_numbers=tuple(range(len(indices) + 1)),
        knot_indices=indices,
    )


def in_from_first_occurrences(indices, n):
    """Returns {N-1} plus each knot index smaller than all earlier ones.

    This is the same set as in_from_rope, described by the strictly decreasing
    first occurrences instead of through m(i).
    """
    result = {n - 1}
    smallest = n - 1
    for index in indices:
        if index < smallest:
            result.add(index)
            smallest = index
    return frozenset(result)


def pd_from_rope(desc, i):
    """Returns pd_i(rho) = sigma_{n_m(i) + 1}."""
    m = m_index(desc, i)
    if not desc.knot_numbers:
        return desc.sigmas[0]
    return desc.sigmas[desc.knot_numbers[m] + 1]


def resolvent_level(desc, i):
    """Returns m(i+1), the level at which a resolved index i rule re-emerges."""
    if not 1 <= i < desc.N - 1:
        raise error.DescriptorError(f"index {i} out of range [1, {desc.N - 2}]")
    return m_index(desc, i + 1)


def _rg_with_case(desc, i):
    if i == desc.N - 1:
        raise error.DescriptorError(f"rg_{i} is the root; only lower indices apply")
    if i not in in_from_rope(desc):
        raise error.DescriptorError(f"index {i} is not in In")
    pd_i = pd_from_rope(desc, i)
    upper = desc.knot_numbers[m_index(desc, i)]
    lower = desc.knot_numbers[m_index(desc, i + 1)]
    # rho <_i sigma_{p+1} is evaluated as pd_i(rho) <=_i sigma_{p+1}.
    for q in range(lower + 1, upper + 1):
        for p in range(q, upper + 1):
            above = desc.sigmas[p + 1]
            if (
                order.prec_eq_i(pd_i, above, i)
                and qpart.rg(above, i) == desc.sigmas[q]
            ):
                return desc.sigmas[q], 1, p
    return pd_i, 2, None


def rg_from_rope(desc, i):
    """Returns rg_i(rho) for a lower index i in In(rho)."""
    return _rg_with_case(desc, i)[0]


def _build_q(desc, inputs):
    validate_descriptor(desc)
    quads = []
    for i in sorted(in_from_rope(desc)):
        if i == desc.N - 1:
            if not isinstance(desc.sigmas[0], od_data.Pi):
                raise error.DescriptorError("the root sigma_0 must be p")
            quads.append(
                term.mk_quad(inputs.st_top, od_data.PI, pd_from_rope(desc, i), i)
            )
            continue
        if i not in inputs.st_lower:
            raise error.DescriptorError(f"missing st input for index {i}")
        kappa = rg_from_rope(desc, i)
        st_i = term.mk_d(term.mk_rsucc(kappa), od_data.EMPTY_Q, inputs.st_lower[i])
        quads.append(term.mk_quad(st_i, kappa, pd_from_rope(desc, i), i))
    return term.mk_qpart(quads)


def synth(desc, inputs):
    """Builds rho = d_{sigma_n}^q body from `desc` and `inputs`.

    Returns:
      A tuple of (rho, the ValidityReport of rho).  An invalid report is
      returned rather than raised.
    """
    q = _build_q(desc, inputs)
    rho = term.mk_d(desc.sigmas[-1], q, inputs.body)
    return rho, validity.check_term(rho, desc.N)


def body_floor(desc, inputs):
    """Returns the value the body of the synthesized collapse must exceed."""
    q = _build_q(desc, inputs)
    sigma = desc.sigmas[-1]
    return ksets.b_above(sigma, [sigma] + qpart.q_terms(q))


def lower_st_floor(desc, i):
    """Returns B_>k(k) for k = rg_i^+; st_lower[i] must exceed it."""
    successor = term.mk_rsucc(rg_from_rope(desc, i))
    return ksets.b_above(successor, successor)


def verify_rope_laws(desc):
    """Checks the rope laws for every lower index of In.

    For i in In other than N-1, with pd_i, rg_i from the rope:
      law.1a: in_i(rg_i) = in_i(pd_{i+1}), pd_i <=_i rg_i <=_i pd_{i+1} and
        pd_i != pd_{i+1};
      law.1b: rg_i(sigma_t) <=_i rg_i whenever rg_i(pd_i) <=_i sigma_t <_i rg_i;
      law.1c: rg_i = pd_i, or rg_i(pd_i) <=_i rg_i.
    """
    validate_descriptor(desc)
    checks = []
    for i in sorted(in_from_rope(desc) - {desc.N - 1}):
        pd_i = pd_from_rope(desc, i)
        pd_next = pd_from_rope(desc, i + 1)
        rg_i, case, p = _rg_with_case(desc, i)
        how = f"i={i}: rg_{i} by case {case}"
        if p is not None:
            how += f" from sigma_{p + 1}"
        checks.append(
            Check(
                "law.1a",
                qpart.in_j(rg_i, i) == qpart.in_j(pd_next, i),
                f"{how}; in_{i}(rg_{i}) must equal in_{i}(pd_{i + 1})",
            )
        )
        checks.append(
            Check(
                "law.1a",
                order.prec_eq_i(pd_i, rg_i, i) and order.prec_eq_i(rg_i, pd_next, i),
                f"{how}; pd_{i} <=_{i} rg_{i} <=_{i} pd_{i + 1} must hold",
            )
        )
        checks.append(
            Check(
                "law.1a",
                pd_i != pd_next,
                f"{how}; pd_{i} must differ from pd_{i + 1}",
            )
        )

        inherited = qpart.rg(pd_i, i)
        offenders = []
        if inherited is not None:
            for t, sigma_t in enumerate(desc.sigmas):
                if order.prec_eq_i(inherited, sigma_t, i) and order.prec_i(
                    sigma_t, rg_i, i
                ):
                    below = qpart.rg(sigma_t, i)
                    if below is None or not order.prec_eq_i(below, rg_i, i):
                        offenders.append(t)
        checks.append(
            Check(
                "law.1b",
                not offenders,
                f"{how}; "
                + (
                    f"fails at sigma_{offenders[0]}"
                    if offenders
                    else f"rg_{i}(sigma_t) <=_{i} rg_{i} on the segment"
                ),
            )
        )
        checks.append(
            Check(
                "law.1c",
                rg_i == pd_i
                or (inherited is not None and order.prec_eq_i(inherited, rg_i, i)),
                f"{how}; rg_{i} = pd_{i} or rg_{i}(pd_{i}) <=_{i} rg_{i}",
            )
        )
    return od_data.ValidityReport(desc.sigmas[-1], tuple(checks))


def extend_chain(sigmas, st_top, beta, n):
    """Returns a collapse with In = {N-1} one step below sigmas[-1].

    The new collapse is d_s^{(st_top, p, s, N-1)} alpha for s = sigmas[-1],
    with alpha = B_>s(s) + omega^beta (st_top + omega^beta when s is p); beta
    is a term, at least 1.
    st_top must be below st_{N-1}(s) for the result to be a diagram.
    """
    sigma = sigmas[-1]
    floor = st_top if isinstance(sigma, od_data.Pi) else ksets.b_above(sigma, sigma)
    alpha = term.mk_sum([floor, term.omega_power(beta)])
    quad = term.mk_quad(st_top, od_data.PI, sigma, n - 1)
    result = term.mk_d(sigma, [quad], alpha)
    report = validity.check_term(result, n)
    if not report.valid:
        failure = report.failures()[0]
        raise error.DescriptorError(
            f"chain extension is not a diagram: {failure.label} {failure.detail}"
        )
    return result


def random_descriptor(rng, n, max_sigmas):
    """Returns a random (RopeDescriptor, SynthInputs) whose synthesis is valid.

    The subscripts form a chain without merging, with strictly decreasing
    natural number st_{N-1}; knots and indices are random; st values and the
    body sit just above their floors.  When there is a knot index, about half
    of the results go on one step below the collapse the chain synthesizes.
    Their subscripts merge, and the smallest knot index takes its rg_i from an
    earlier subscript.
    """
    top = rng.randint(1, max_sigmas)
    start = top + 1 + rng.randint(0, 2)
    sigmas = [od_data.PI]
    for p in range(top):
        beta = term.nat(rng.randint(1, 2))
        sigmas.append(extend_chain(sigmas, term.nat(start - p), beta, n))
    knot_count = rng.randint(0, min(top - 1, 3))
    knots = tuple(sorted(rng.sample(range(top - 1), knot_count))) + (top - 1,)
    indices = tuple(rng.randint(2, n - 2) for _ in range(knot_count))
    desc = od_data.RopeDescriptor(
        N=n, sigmas=tuple(sigmas), knot_numbers=knots, knot_indices=indices
    )
    st_top = term.nat(rng.randint(0, start - top))
    # A resumed chain needs room below each lower st to decrease into.
    inputs = _inputs_above_floors(rng, desc, st_top, 2 if indices else 1)
    if not indices or rng.random() < 0.5:
        return desc, inputs

    rho, report = synth(desc, inputs)
    resumed = od_data.RopeDescriptor(
        N=n,
        sigmas=desc.sigmas + (rho,),
        knot_numbers=tuple(k + 1 for k in knots),
        knot_indices=indices,
    )
    resumed_inputs = _inputs_above_floors(rng, resumed, st_top, 1)
    _, resumed_report = synth(resumed, resumed_inputs)
    if not (
        report.valid and resumed_report.valid and verify_rope_laws(resumed).valid
    ):
        LOGGER.debug("keeping the unmerged chain below %r", desc.sigmas[-1])
        return desc, inputs
    return resumed, resumed_inputs


def _inputs_above_floors(rng, desc, st_top, margin):
    st_lower = {
        i: term.mk_sum([lower_st_floor(desc, i), term.nat(margin)])
        for i in in_from_rope(desc) - {desc.N - 1}
    }
    draft = od_data.SynthInputs(od_data.ZERO, st_top, st_lower)
    body = term.mk_sum(
        [body_floor(desc, draft), term.omega_power(term.nat(rng.randint(1, 2)))]
    )
    return od_data.SynthInputs(body, st_top, st_lower)


def st_decreases(terms, n):
    """Returns True if st_{N-1} strictly decreases along every pd_{N-1} step.

    A step is a term t whose pd_{N-1} is also in `terms`; st_{N-1}(t) must be
    below st_{N-1}(pd_{N-1}(t)) when the latter is defined.
    """
    present = set(terms)
    for t in terms:
        parent = qpart.pd(t, n - 1)
        if parent is None or parent not in present:
            continue
        upper = qpart.st(parent, n - 1)
        if upper is not None and not order.lt(qpart.st(t, n - 1), upper):
            return False
    return True
