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

"""Q parts: the derived accessors In, pd_j, st_j, rg_j and the shape conditions.

For a collapse rho = d_sigma^q alpha with q = (nu_m, kappa_m, tau_m, j_m)_{m<=l}
and 2 <= j <= j_l, let m be the least index with j <= j_m.  Then pd_j(rho) is
tau_m; if j = j_m, st_j(rho) = nu_m and rg_j(rho) = kappa_m, and otherwise both
are inherited from tau_m (and undefined when tau_m has no Q part).
"""

from ordiag.notation import order
from ordiag.notation import term
from ordiag.util import error
from ordiag.util import od_data
from ordiag.util.od_data import Check, Ordering


def has_index(rho, j):
    """Returns True if pd_j(rho) is defined."""
    return term.is_dq(rho) and 2 <= j <= rho.q[-1].j


def derive(rho, j):
    """Returns the QView of `rho` at index `j`."""
    if not isinstance(rho, od_data.D):
        raise error.QPartError(f"{rho!r} is not a collapse")
    if not rho.q:
        raise error.QPartError(f"{rho!r} is not in D^Q")
    if not 2 <= j <= rho.q[-1].j:
        raise error.QPartError(f"index {j} out of range for {rho!r}")
    quad = next(quad for quad in rho.q if j <= quad.j)
    if quad.j == j:
        return od_data.QView(pd=quad.tau, st=quad.nu, rg=quad.kappa, defined_in=True)
    st, rg = in_j(quad.tau, j)
    return od_data.QView(pd=quad.tau, st=st, rg=rg, defined_in=False)


def in_j(t, j):
    """Returns the pair (st_j(t), rg_j(t)), or (None, None) when undefined."""
    if not has_index(t, j):
        return None, None
    view = derive(t, j)
    return view.st, view.rg


def st(t, j):
    return in_j(t, j)[0]


def rg(t, j):
    return in_j(t, j)[1]


def pd(t, j):
    return derive(t, j).pd if has_index(t, j) else None


def in_set(rho):
    if not isinstance(rho, od_data.D):
        raise error.QPartError(f"In of non-collapse {rho!r}")
    return frozenset(quad.j for quad in rho.q)


def q_terms(q):
    """Returns the terms of a Q part as a list (nu, kappa, tau per quadruple)."""
    result = []
    for quad in q:
        result.extend((quad.nu, quad.kappa, quad.tau))
    return result


def shape_check(sigma, q, alpha, n):
    """Checks the four shape conditions on the Q part of d_sigma^q alpha.

    Returns a ValidityReport whose checks are labelled shape.1 (indices),
    shape.2 (kappa), shape.3 (nu, including the bound on terms above p) and
    shape.4 (tau).
    """
    if n < 4:
        raise error.ValidityError(f"N must be at least 4, got {n}")
    q = term.mk_qpart(q)
    subject = od_data.D(sigma, q, alpha)
    if not q:
        return od_data.ValidityReport(
            subject, (Check("shape.1", True, "empty Q part"),)
        )
    quads = list(q)
    last = quads[-1]
    checks = []

    js = [quad.j for quad in quads]
    increasing = all(a < b for a, b in zip(js, js[1:]))
    checks.append(Check("shape.1", js[0] >= 2, f"j_0 = {js[0]} must be at least 2"))
    checks.append(Check("shape.1", increasing, f"indices {js} must increase"))
    checks.append(
        Check("shape.1", last.j == n - 1, f"j_l must be N-1 = {n - 1}, got {last.j}")
    )

    checks.append(
        Check("shape.2", isinstance(last.kappa, od_data.Pi), "kappa_l must be p")
    )
    for m, quad in enumerate(quads[:-1]):
        checks.append(
            Check(
                "shape.2",
                term.is_regular(quad.kappa) and order.lt(quad.kappa, od_data.PI),
                f"kappa_{m} must be regular and below p",
            )
        )
    for m, quad in enumerate(quads):
        checks.append(
            Check(
                "shape.2",
                order.prec_eq(sigma, quad.kappa),
                f"sigma must reach kappa_{m} through subscripts",
            )
        )

    if isinstance(sigma, od_data.Pi):
        checks.append(
            Check(
                "shape.3", order.le(last.nu, alpha), "sigma = p requires nu_l <= body"
            )
        )
    for m, quad in enumerate(quads[:-1]):
        bounded = term.is_regular(quad.kappa) and not isinstance(
            quad.kappa, od_data.Pi
        )
        if bounded:
            bounded = order.lt(quad.nu, term.mk_rsucc(quad.kappa))
        checks.append(Check("shape.3", bounded, f"nu_{m} must be below kappa_{m}^+"))
    above_pi = [
        t
        for t in q_terms(q)
        if order.cmp(t, od_data.PI) == Ordering.GT and t != last.nu
    ]
    checks.append(
        Check("shape.3", not above_pi, "only nu_l may exceed p in the Q part")
    )

    checks.append(Check("shape.4", quads[0].tau == sigma, "tau_0 must be sigma"))
    for m, quad in enumerate(quads):
        checks.append(
            Check(
                "shape.4",
                isinstance(quad.tau, od_data.Pi) or term.is_dq(quad.tau),
                f"tau_{m} must be p or carry a Q part",
            )
        )
        checks.append(
            Check(
                "shape.4",
                order.prec_eq(sigma, quad.tau),
                f"sigma must reach tau_{m} through subscripts",
            )
        )
    if isinstance(last.tau, od_data.Pi):
        checks.append(
            Check(
                "shape.4",
                isinstance(sigma, od_data.Pi),
                "tau_l = p requires sigma = p",
            )
        )
    return od_data.ValidityReport(subject, tuple(checks))
