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

"""An independent comparison for the {0, +, phi} fragment.

Terms are encoded as ground terms over the symbols 0, + (binary, nested to the
right) and phi, and compared by the lexicographic path ordering with precedence
0 < + < phi and left-to-right status.  On normal forms this ordering coincides
with the ordinal order.  Nothing here knows about ordinals or uses
ordiag.notation.order, so it serves as an oracle for cmp on the fragment.
"""

from ordiag.util import error
from ordiag.util import od_data
from ordiag.util import simple_memoizer

_PRECEDENCE = {"0": 0, "+": 1, "phi": 2}


def _encode(t):
    if isinstance(t, od_data.Zero):
        return ("0",)
    if isinstance(t, od_data.Phi):
        return ("phi", _encode(t.first), _encode(t.second))
    if isinstance(t, od_data.Sum):
        parts = [_encode(part) for part in t.parts]
        result = parts[-1]
        for part in reversed(parts[:-1]):
            result = ("+", part, result)
        return result
    raise error.OrderError(f"{t!r} is outside the Veblen fragment")


def _greater_or_equal(s, t):
    return s == t or _greater(s, t)


@simple_memoizer.memoize
def _greater(s, t):
    """Returns True if s is above t in the lexicographic path ordering."""
    head, args = s[0], s[1:]
    if any(_greater_or_equal(arg, t) for arg in args):
        return True
    t_head, t_args = t[0], t[1:]
    if not all(_greater(s, u) for u in t_args):
        return False
    if head != t_head:
        return _PRECEDENCE[head] > _PRECEDENCE[t_head]
    for x, y in zip(args, t_args):
        if x != y:
            return _greater(x, y)
    return False


def oracle_veblen_cmp(a, b):
    """Returns the Ordering of `a` relative to `b` for fragment terms."""
    s, t = _encode(a), _encode(b)
    if s == t:
        return od_data.Ordering.EQ
    return od_data.Ordering.GT if _greater(s, t) else od_data.Ordering.LT
