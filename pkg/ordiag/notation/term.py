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

"""Constructors, classification and structural accessors for diagrams.

All constructors here return canonical forms: sums are flattened natural sums
sorted non-increasingly, and Veblen terms are reduced at fixed points.  Two
canonical terms are equal as values iff they are equal as dataclasses.
"""

import functools

from ordiag.notation import order
from ordiag.util import error
from ordiag.util import od_data
from ordiag.util.od_data import D, Omega, Phi, Pi, RSucc, Sum, Zero

_STRONGLY_CRITICAL = (Omega, Pi, RSucc, D)


def classify(t):
    """Returns the P/SC/R membership flags of `t`."""
    if isinstance(t, _STRONGLY_CRITICAL):
        return od_data.ClassFlags(in_p=True, in_sc=True, in_r=True)
    if isinstance(t, Phi):
        return od_data.ClassFlags(in_p=True, in_sc=False, in_r=False)
    return od_data.ClassFlags(in_p=False, in_sc=False, in_r=False)


def is_sc(t):
    return isinstance(t, _STRONGLY_CRITICAL)


def is_regular(t):
    return isinstance(t, _STRONGLY_CRITICAL)


def is_principal(t):
    return isinstance(t, (Phi,) + _STRONGLY_CRITICAL)


def is_dq(t):
    """Returns True if `t` is a collapse with a non-empty Q part."""
    return isinstance(t, D) and bool(t.q)


def body(t):
    if not isinstance(t, D):
        raise error.TermError(f"{t!r} has no body")
    return t.body


def csupport(t):
    """Returns c(t) = {subscript, body} plus every term of every quadruple."""
    if not isinstance(t, D):
        raise error.TermError(f"csupport of non-collapse {t!r}")
    result = {t.sub, t.body}
    for quad in t.q:
        result.update((quad.nu, quad.kappa, quad.tau))
    return frozenset(result)


def subscript_path(t):
    """Returns [t, sub(t), sub(sub(t)), ...] ending at the first non-collapse."""
    if not isinstance(t, D):
        raise error.TermError(f"subscript_path of non-collapse {t!r}")
    path = [t]
    while isinstance(path[-1], D):
        path.append(path[-1].sub)
    return path


def mk_sum(parts):
    """Returns the canonical natural sum of `parts`."""
    flat = []
    for part in parts:
        if isinstance(part, Sum):
            flat.extend(part.parts)
        elif not isinstance(part, Zero):
            flat.append(part)
    if not flat:
        return od_data.ZERO
    if len(flat) == 1:
        return flat[0]
    flat.sort(key=functools.cmp_to_key(order.cmp), reverse=True)
    return Sum(tuple(flat))


def mk_phi(first, second):
    """Returns the canonical form of phi(first, second)."""
    if is_sc(second) and order.cmp(first, second) == od_data.Ordering.LT:
        return second
    if (
        isinstance(second, Phi)
        and order.cmp(first, second.first) == od_data.Ordering.LT
    ):
        return second
    if isinstance(second, Zero) and is_sc(first):
        return first
    return Phi(first, second)


def omega_power(exponent):
    return mk_phi(od_data.ZERO, exponent)


ONE = Phi(od_data.ZERO, od_data.ZERO)
OMEGA_POWER_ONE = Phi(od_data.ZERO, ONE)


def nat(n):
    """Returns the natural number n as an n-fold sum of 1."""
    return mk_sum([ONE] * n)


def mk_rsucc(base):
    if not is_regular(base) or isinstance(base, Pi):
        raise error.TermError(f"next regular of {base!r} is not allowed")
    return RSucc(base)


def mk_quad(nu, kappa, tau, j):
    for slot in (nu, kappa, tau):
        if not isinstance(slot, od_data.Term):
            raise error.QPartError(f"quadruple slot {slot!r} is not a term")
    if not isinstance(j, int) or isinstance(j, bool):
        raise error.QPartError(f"quadruple index {j!r} is not an integer")
    return od_data.Quad(nu, kappa, tau, j)


def mk_qpart(quads):
    quads = tuple(quads)
    for quad in quads:
        if not isinstance(quad, od_data.Quad):
            raise error.QPartError(f"{quad!r} is not a quadruple")
        mk_quad(quad.nu, quad.kappa, quad.tau, quad.j)
    return od_data.QPart(quads)


def mk_d(sub, q, body_term):
    if not is_regular(sub):
        raise error.TermError(f"collapse subscript {sub!r} is not regular")
    if not isinstance(q, od_data.QPart):
        q = mk_qpart(q)
    return D(sub, q, body_term)


def is_canonical(t):
    """Returns True if `t` is in the form the constructors above produce."""
    if isinstance(t, (Zero, Omega, Pi)):
        return True
    if isinstance(t, Sum):
        if len(t.parts) < 2:
            return False
        if not all(is_principal(p) and is_canonical(p) for p in t.parts):
            return False
        return all(
            order.cmp(left, right) != od_data.Ordering.LT
            for left, right in zip(t.parts, t.parts[1:])
        )
    if isinstance(t, Phi):
        return (
            is_canonical(t.first)
            and is_canonical(t.second)
            and mk_phi(t.first, t.second) == t
        )
    if isinstance(t, RSucc):
        return is_regular(t.base) and not isinstance(t.base, Pi) and is_canonical(
            t.base
        )
    if isinstance(t, D):
        if not is_regular(t.sub) or not isinstance(t.q, od_data.QPart):
            return False
        slots = [t.sub, t.body]
        for quad in t.q:
            if not isinstance(quad.j, int):
                return False
            slots.extend((quad.nu, quad.kappa, quad.tau))
        return all(isinstance(s, od_data.Term) and is_canonical(s) for s in slots)
    return False


def children(t):
    """Returns the immediate subterms of `t`."""
    if isinstance(t, Sum):
        return t.parts
    if isinstance(t, Phi):
        return (t.first, t.second)
    if isinstance(t, RSucc):
        return (t.base,)
    if isinstance(t, D):
        result = [t.sub]
        for quad in t.q:
            result.extend((quad.nu, quad.kappa, quad.tau))
        result.append(t.body)
        return tuple(result)
    return ()


def size(t):
    return 1 + sum(size(c) for c in children(t))


def d_subterms(t):
    """Returns every collapse occurring in `t`, `t` included."""
    result = set()
    stack = [t]
    while stack:
        current = stack.pop()
        if isinstance(current, D):
            if current in result:
                continue
            result.add(current)
        stack.extend(children(current))
    return frozenset(result)
