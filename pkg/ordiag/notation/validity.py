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

"""The membership predicate: which collapses are diagrams.

check_d evaluates every condition on one collapse d_sigma^q alpha, assuming its
proper subterms are diagrams; check_term closes that over all collapses in a
term, innermost first.  Failed conditions are reported, never raised.
"""

from ordiag.notation import ksets
from ordiag.notation import order
from ordiag.notation import printer
from ordiag.notation import qpart
from ordiag.notation import term
from ordiag.util import error
from ordiag.util import od_data
from ordiag.util import simple_memoizer
from ordiag.util.od_data import Check


def _require_n(n):
    if n < 4:
        raise error.ValidityError(f"N must be at least 4, got {n}")


def check_d(sigma, q, alpha, n):
    """Returns the ValidityReport of rho = d_sigma^q alpha."""
    _require_n(n)
    if not term.is_regular(sigma):
        raise error.ValidityError(f"subscript {sigma!r} is not regular")
    q = term.mk_qpart(q)
    rho = od_data.D(sigma, q, alpha)
    checks = []
    shape_ok = True
    if q:
        shape = qpart.shape_check(sigma, q, alpha, n)
        checks.extend(shape.checks)
        shape_ok = shape.valid

    bound = ksets.b_above(sigma, [sigma, alpha] + qpart.q_terms(q))
    checks.append(
        Check(
            "body",
            order.lt(bound, alpha),
            f"B_>sigma = {printer.print_term(bound)} must be below the body "
            f"{printer.print_term(alpha)}",
        )
    )
    if q and shape_ok:
        for i in sorted(qpart.in_set(rho)):
            checks.extend(_check_index(rho, i, n))
    return od_data.ValidityReport(rho, tuple(checks))


def _check_index(rho, i, n):
    view = qpart.derive(rho, i)
    kappa, pd_i, st_i = view.rg, view.pd, view.st
    checks = [
        Check(
            "index_link",
            order.prec_eq_i(pd_i, kappa, i),
            f"pd_{i} must reach rg_{i} through {i}-predecessors",
        )
    ]
    if i < n - 1:
        pd_next = qpart.derive(rho, i + 1).pd
        checks.append(
            Check(
                "index_link",
                qpart.in_j(kappa, i) == qpart.in_j(pd_next, i),
                f"in_{i}(rg_{i}) must equal in_{i}(pd_{i + 1})",
            )
        )
        checks.append(
            Check(
                "index_link",
                order.prec_eq_i(kappa, pd_next, i),
                f"rg_{i} must reach pd_{i + 1} through {i}-predecessors",
            )
        )
        checks.append(
            Check("index_link", pd_i != pd_next, f"pd_{i} must differ from pd_{i + 1}")
        )

    branches = [
        ("body_bound", _branch_body_bound(rho, i, view)),
        ("inherited", _branch_inherited(i, view)),
        ("first_origin", _branch_first_origin(i, view)),
    ]
    holding = [(tag, why) for tag, (held, why) in branches if held]
    if holding:
        tag, why = holding[0]
        detail = f"i={i}: branch {tag} holds" + (f" ({why})" if why else "")
    else:
        detail = f"i={i}: " + "; ".join(
            f"branch {tag}: {why}" for tag, (_, why) in branches
        )
    checks.append(Check("index_bound", bool(holding), detail))

    checks.append(_check_k_bound(rho, i, kappa, st_i))
    return checks


def _branch_body_bound(rho, i, view):
    if view.rg != view.pd:
        return False, f"rg_{i} differs from pd_{i}"
    # alpha_1 is taken along collapse subscripts (the plain prec closure), not
    # along i-predecessors.
    owners = [t for t in term.subscript_path(rho)[:-1] if t.sub == view.rg]
    if not owners:
        return False, f"no collapse below rg_{i} on the subscript path"
    bound = ksets.b_above(view.rg, view.st)
    if not order.lt(bound, owners[0].body):
        return False, (
            f"B_>rg = {printer.print_term(bound)} is not below "
            f"{printer.print_term(owners[0].body)}"
        )
    return True, "alpha_1 located along collapse subscripts"


def _branch_inherited(i, view):
    inherited_st, inherited_rg = qpart.in_j(view.pd, i)
    if inherited_rg is None or inherited_rg != view.rg:
        return False, f"rg_{i}(pd_{i}) differs from rg_{i}"
    if not order.lt(view.st, inherited_st):
        return False, f"st_{i} is not below st_{i}(pd_{i})"
    return True, ""


def _branch_first_origin(i, view):
    kappa = view.rg
    start = qpart.rg(view.pd, i)
    if start is None or not order.prec_i(start, kappa, i):
        return False, f"rg_{i}(pd_{i}) does not reach rg_{i}"
    walk = [start] + order.pd_chain(start, i)
    for tau in walk[: walk.index(kappa)]:
        tau_rg = qpart.rg(tau, i)
        if tau_rg is None or not order.prec_eq_i(tau_rg, kappa, i):
            return False, f"an intermediate diagram has rg_{i} beyond rg_{i}(rho)"
    above = order.pd_chain(view.pd, i)
    if kappa not in above:
        return False, f"rg_{i} is not above pd_{i}"
    origins = [t for t in above[: above.index(kappa)] if qpart.rg(t, i) == kappa]
    if not origins:
        return False, f"no diagram between pd_{i} and rg_{i} has the same rg_{i}"
    if not order.lt(view.st, qpart.st(origins[0], i)):
        return False, f"st_{i} is not below st_{i} of the lowest origin"
    return True, ""


def _check_k_bound(rho, i, kappa, st_i):
    # K_k(st) only changes at subscripts occurring in st, so those, kappa and
    # Omega cover every k <= kappa.
    candidates = {kappa, od_data.OMEGA}
    candidates.update(x.sub for x in term.d_subterms(st_i))
    failing = [
        k
        for k in candidates
        if order.le(k, kappa)
        and not ksets.all_below(ksets.k_at(k, st_i), rho)
    ]
    detail = f"i={i}: K_k(st_{i}) must lie below rho for k <= rg_{i}"
    if failing:
        detail += f"; fails at k = {printer.print_term(failing[0])}"
    return Check("st_coefficients", not failing, detail)


@simple_memoizer.memoize
def _collapse_is_valid(t, n):
    return check_d(t.sub, t.q, t.body, n).valid


def check_term(t, n):
    """Returns the ValidityReport of `t` and all collapses inside it."""
    _require_n(n)
    if not term.is_canonical(t):
        return od_data.ValidityReport(
            t, (Check("subterms", False, "term is not in canonical form"),)
        )
    inner = sorted(term.d_subterms(t) - {t}, key=term.size)
    for u in inner:
        if not _collapse_is_valid(u, n):
            return od_data.ValidityReport(
                t,
                (
                    Check(
                        "subterms",
                        False,
                        f"inner collapse {printer.print_term(u)} is invalid",
                    ),
                ),
            )
    checks = [Check("subterms", True, f"{len(inner)} inner collapses valid")]
    if isinstance(t, od_data.D):
        checks.extend(check_d(t.sub, t.q, t.body, n).checks)
    return od_data.ValidityReport(t, tuple(checks))


def is_valid(t, n):
    return check_term(t, n).valid


def gamma_bound(alpha, beta, sigma):
    """Returns max{B_p(beta), B_>sigma({sigma, alpha})} + omega^beta.

    Requires sigma < p and B_tau(beta) <= B_tau(alpha) for every tau < p.  The
    result gamma satisfies B_>sigma({sigma, gamma, gamma + K(alpha)}) < gamma
    with K(alpha) the largest element of K_sigma(alpha), so d_sigma(gamma) and
    d_sigma(gamma + K(alpha)) meet the body bound.
    """
    if not term.is_regular(sigma) or not order.lt(sigma, od_data.PI):
        raise error.ValidityError(f"{sigma!r} must be regular and below p")
    tau = body_bound_violation(alpha, beta)
    if tau is not None:
        raise error.ValidityError(
            "body bound hypothesis violated at "
            f"{printer.print_term(tau)}: B(beta) exceeds B(alpha)"
        )
    gamma = term.mk_sum(
        [
            order.term_max(
                [ksets.b_at(od_data.PI, beta), ksets.b_above(sigma, [sigma, alpha])]
            ),
            term.omega_power(beta),
        ]
    )
    widened = term.mk_sum([gamma, ksets.k_max(sigma, alpha)])
    if not order.lt(ksets.b_above(sigma, [sigma, gamma, widened]), gamma):
        raise error.ValidityError(
            f"body bound fails for gamma = {printer.print_term(gamma)}"
        )
    return gamma


def body_bound_violation(alpha, beta):
    """Returns some tau < p with B_tau(beta) > B_tau(alpha), or None.

    B_tau(beta) is Zero unless tau is the subscript of a collapse in beta, so
    only those subscripts are tried.
    """
    for tau in sorted({x.sub for x in term.d_subterms(beta)}, key=order.sort_key()):
        if order.lt(tau, od_data.PI) and not order.le(
            ksets.b_at(tau, beta), ksets.b_at(tau, alpha)
        ):
            return tau
    return None
