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

"""The comparison relation on diagrams and the reachability relations.

cmp is a total order on canonical terms:

  * Zero is least.
  * Sums (and single principal terms, read as one-part sums) compare as
    non-increasing sequences of principal parts, a proper prefix being smaller.
  * Veblen terms compare with each other by the usual Veblen rule, and against a
    strongly critical s by: phi(a, b) < s iff a < s and b < s.
  * Among the regulars, p is largest and x^+ < y iff x < y.  A collapse
    d_s^q(a) is below a regular y iff s <= y, or y = x^+ and d_s^q(a) <= x.
  * Two collapses on the same subscript s compare by the measure (body, Q part)
    checked against their K_s coefficients: with the measure of rho1 below that
    of rho2, rho1 < rho2 iff K_s c(rho1) < rho2; otherwise rho1 < rho2 iff
    rho1 <= K_s c(rho2).
  * For collapses on different subscripts s1, s2: rho1 < rho2 if s1 <= rho2,
    rho1 > rho2 if s2 <= rho1.  Otherwise the collapse on the smaller
    subscript s is placed by the K_s coefficients of the other one.

Every recursive call compares terms of smaller total size.

prec follows collapse subscripts; prec_i follows i-predecessors.
"""

import functools

from ordiag.notation import ksets
from ordiag.notation import qpart
from ordiag.notation import term
from ordiag.notation import validity
from ordiag.util import error
from ordiag.util import od_data
from ordiag.util import simple_memoizer
from ordiag.util.od_data import D, Ordering, Phi, Pi, RSucc, Sum, Zero


def _sign(n):
    if n < 0:
        return Ordering.LT
    if n > 0:
        return Ordering.GT
    return Ordering.EQ


@simple_memoizer.memoize
def cmp(a, b):
    """Returns the Ordering of `a` relative to `b`."""
    if a == b:
        return Ordering.EQ
    if isinstance(a, Zero):
        return Ordering.LT
    if isinstance(b, Zero):
        return Ordering.GT
    if isinstance(a, Sum) or isinstance(b, Sum):
        return _cmp_sequences(_parts(a), _parts(b))
    if isinstance(a, Phi) and isinstance(b, Phi):
        return _cmp_veblen(a, b)
    if isinstance(a, Phi):
        return _cmp_phi_atom(a, b)
    if isinstance(b, Phi):
        return _flip(_cmp_phi_atom(b, a))
    return _cmp_atoms(a, b)


def _flip(ordering):
    return Ordering(-ordering.value)


def _parts(t):
    return t.parts if isinstance(t, Sum) else (t,)


def _cmp_sequences(left, right):
    for x, y in zip(left, right):
        result = cmp(x, y)
        if result != Ordering.EQ:
            return result
    return _sign(len(left) - len(right))


def _cmp_veblen(a, b):
    first = cmp(a.first, b.first)
    if first == Ordering.EQ:
        return cmp(a.second, b.second)
    if first == Ordering.LT:
        return Ordering.LT if cmp(a.second, b) == Ordering.LT else Ordering.GT
    return Ordering.LT if cmp(a, b.second) == Ordering.LT else Ordering.GT


def _cmp_phi_atom(phi, atom):
    if (
        cmp(phi.first, atom) == Ordering.LT
        and cmp(phi.second, atom) == Ordering.LT
    ):
        return Ordering.LT
    return Ordering.GT


def _below(condition):
    return Ordering.LT if condition else Ordering.GT


def _cmp_atoms(a, b):
    """Compares two distinct strongly critical terms."""
    if isinstance(a, Pi):
        return Ordering.GT
    if isinstance(b, Pi):
        return Ordering.LT
    if isinstance(a, D) and isinstance(b, D):
        if a.sub == b.sub:
            return _cmp_same_subscript(a, b)
        return _cmp_collapses(a, b)
    if isinstance(a, D):
        return _cmp_collapse_regular(a, b)
    if isinstance(b, D):
        return _flip(_cmp_collapse_regular(b, a))
    # Omega and next-regulars.
    if isinstance(a, RSucc) and isinstance(b, RSucc):
        return cmp(a.base, b.base)
    if isinstance(a, RSucc):
        return _below(lt(a.base, b))
    return _below(not lt(b.base, a))


def _cmp_collapse_regular(rho, x):
    """Compares a collapse with Omega or a next-regular x."""
    if le(rho.sub, x):
        return Ordering.LT
    return _below(isinstance(x, RSucc) and le(rho, x.base))


def _measure_cmp(a, b):
    result = cmp(a.body, b.body)
    if result != Ordering.EQ:
        return result
    return cmp_qparts(a.q, b.q)


def _coefficients(sigma, rho):
    """Returns K_sigma c(rho), leaving out rho's subscript when it is sigma."""
    parts = term.csupport(rho)
    if rho.sub == sigma:
        parts = parts - {sigma}
    return ksets.k_at(sigma, parts)


def _cmp_same_subscript(a, b):
    sigma = a.sub
    if _measure_cmp(a, b) == Ordering.LT:
        return _below(ksets.all_below(_coefficients(sigma, a), b))
    # Equal measures on one subscript are equal terms, so here b's is smaller.
    return _below(ksets.some_at_least(a, _coefficients(sigma, b)))


def _cmp_collapses(a, b):
    if le(a.sub, b):
        return Ordering.LT
    if le(b.sub, a):
        return Ordering.GT
    if lt(a.sub, b.sub):
        return _below(ksets.some_at_least(a, _coefficients(a.sub, b)))
    return _below(ksets.all_below(_coefficients(b.sub, a), b))


def cmp_qparts(left, right):
    """Compares Q parts quadruple by quadruple; a proper prefix is smaller."""
    for x, y in zip(left, right):
        for s, t in ((x.nu, y.nu), (x.kappa, y.kappa), (x.tau, y.tau)):
            result = cmp(s, t)
            if result != Ordering.EQ:
                return result
        if x.j != y.j:
            return _sign(x.j - y.j)
    return _sign(len(left) - len(right))


def lt(a, b):
    return cmp(a, b) == Ordering.LT


def le(a, b):
    return cmp(a, b) != Ordering.GT


def sort_key():
    return functools.cmp_to_key(cmp)


def term_max(terms):
    """Returns the largest of `terms` under cmp, or Zero if there are none."""
    best = od_data.ZERO
    for t in terms:
        if cmp(t, best) == Ordering.GT:
            best = t
    return best


def checked_cmp(a, b, n):
    """Like cmp, but raises OrderError unless both terms are valid diagrams."""
    for t in (a, b):
        if not validity.check_term(t, n).valid:
            raise error.OrderError(f"compare on invalid diagram {t!r}")
    return cmp(a, b)


def prec(a, b):
    """Returns True if `b` is reached from `a` by following collapse subscripts."""
    current = a
    while isinstance(current, D):
        current = current.sub
        if current == b:
            return True
    return False


def prec_eq(a, b):
    return a == b or prec(a, b)


def pd_chain(sigma, i):
    """Returns [pd_i(sigma), pd_i(pd_i(sigma)), ...]; empty outside D^Q."""
    chain = []
    current = sigma
    while qpart.has_index(current, i):
        current = qpart.derive(current, i).pd
        chain.append(current)
    return chain


def prec_i(a, b, i):
    return b in pd_chain(a, i)


def prec_eq_i(a, b, i):
    return a == b or prec_i(a, b, i)
