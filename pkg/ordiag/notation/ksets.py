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

"""Coefficient sets: K, K_sigma, D_sigma and the body bounds B_sigma, B_>sigma.

Each operation takes a single term or an iterable of terms; on an iterable the
result is the union (for sets) or the maximum (for bounds) over its elements.
Empty maxima are Zero.
"""

from ordiag.notation import order
from ordiag.notation import term
from ordiag.util import error
from ordiag.util import od_data
from ordiag.util import simple_memoizer
from ordiag.util.od_data import D, Omega, Ordering, Phi, Pi, RSucc, Sum, Zero

EMPTY = frozenset()


def _require_regular(sigma):
    if not term.is_regular(sigma):
        raise error.TermError(f"{sigma!r} is not regular")


def _terms(alpha):
    if isinstance(alpha, od_data.Term):
        return (alpha,)
    return tuple(alpha)


def all_below(ys, beta):
    """Y < beta: every element of ys is below beta."""
    return all(order.lt(y, beta) for y in ys)


def some_at_least(beta, ys):
    """beta <= Y: some element of ys is at least beta."""
    return any(order.le(beta, y) for y in ys)


@simple_memoizer.memoize
def k_all(alpha):
    """Returns K(alpha): the strongly critical components of alpha."""
    if isinstance(alpha, Zero):
        return EMPTY
    if isinstance(alpha, Sum):
        return frozenset().union(*(k_all(part) for part in alpha.parts))
    if isinstance(alpha, Phi):
        return k_all(alpha.first) | k_all(alpha.second)
    return frozenset((alpha,))


def d_set(sigma, alpha):
    """Returns D_sigma(alpha), the sigma-collapses reachable from alpha."""
    _require_regular(sigma)
    return frozenset().union(*(_d_set(sigma, a) for a in _terms(alpha)))


@simple_memoizer.memoize
def _d_set(sigma, alpha):
    if isinstance(alpha, (Zero, Omega, Pi)):
        return EMPTY
    if not term.is_sc(alpha):
        return frozenset().union(*(_d_set(sigma, k) for k in k_all(alpha)))
    if isinstance(alpha, RSucc):
        return _d_set(sigma, alpha.base)
    tau = alpha.sub
    relation = order.cmp(tau, sigma)
    if relation == Ordering.GT:
        return _d_set_many(sigma, term.csupport(alpha))
    if relation == Ordering.EQ:
        return frozenset((alpha,)) | _d_set_many(sigma, term.csupport(alpha))
    return _d_set(sigma, tau)


def _d_set_many(sigma, terms):
    return frozenset().union(*(_d_set(sigma, t) for t in terms))


def b_at(sigma, alpha):
    """Returns B_sigma(alpha), the largest body in D_sigma(alpha)."""
    return order.term_max(term.body(x) for x in d_set(sigma, alpha))


def b_above(sigma, alpha):
    """Returns B_>sigma(alpha), the maximum of B_tau(alpha) over tau > sigma.

    Only subscripts that occur in alpha can give a non-empty D_tau(alpha), so
    tau ranges over those (and p) instead of over all regulars above sigma.
    """
    _require_regular(sigma)
    terms = _terms(alpha)
    candidates = {od_data.PI}
    for t in terms:
        candidates.update(x.sub for x in term.d_subterms(t))
    return order.term_max(
        b_at(tau, terms) for tau in candidates if order.lt(sigma, tau)
    )


def k_at(sigma, alpha):
    """Returns K_sigma(alpha)."""
    _require_regular(sigma)
    return frozenset().union(*(_k_at(sigma, a) for a in _terms(alpha)))


@simple_memoizer.memoize
def _k_at(sigma, alpha):
    if isinstance(alpha, (Zero, Omega, Pi)):
        return EMPTY
    if isinstance(alpha, Sum):
        return frozenset().union(*(_k_at(sigma, part) for part in alpha.parts))
    if isinstance(alpha, Phi):
        return _k_at(sigma, alpha.first) | _k_at(sigma, alpha.second)
    if isinstance(alpha, RSucc):
        return _k_at(sigma, alpha.base)
    tau = alpha.sub
    if order.lt(sigma, tau):
        return _k_at_many(sigma, term.csupport(alpha))
    if order.lt(tau, sigma) and not order.prec(tau, sigma):
        return _k_at(sigma, tau)
    # tau = sigma, or tau reaches sigma through subscripts.
    return frozenset((alpha,)) | _k_at_many(sigma, term.csupport(alpha))


def _k_at_many(sigma, terms):
    return frozenset().union(*(_k_at(sigma, t) for t in terms))


def k_max(sigma, alpha):
    """Returns the largest element of K_sigma(alpha), or Zero."""
    return order.term_max(k_at(sigma, alpha))
