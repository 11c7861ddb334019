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

"""Canonical spelling of diagram terms.

The spelling is the term syntax read by front_end.textio; printing a canonical
term and parsing the text back gives the same term.
"""

from ordiag.util import error
from ordiag.util.od_data import D, Omega, Phi, Pi, RSucc, Sum, Zero


def print_term(t, pretty=False):
    """Returns the canonical spelling of `t`.

    With pretty=True, separators are spaced; the result still parses, to the
    same term, but is not the canonical spelling.
    """
    comma = ", " if pretty else ","
    plus = " + " if pretty else "+"
    semicolon = "; " if pretty else ";"
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Omega):
        return "W"
    if isinstance(t, Pi):
        return "p"
    if isinstance(t, Sum):
        return plus.join(print_term(part, pretty) for part in t.parts)
    if isinstance(t, Phi):
        return (
            f"f({print_term(t.first, pretty)}{comma}{print_term(t.second, pretty)})"
        )
    if isinstance(t, RSucc):
        base = print_term(t.base, pretty)
        return base + "^+"
    if isinstance(t, D):
        text = "d[" + print_term(t.sub, pretty)
        if t.q:
            text += semicolon + comma.join(_print_quad(quad, pretty) for quad in t.q)
        return text + "](" + print_term(t.body, pretty) + ")"
    raise error.TermError(f"cannot print {t!r}")


def _print_quad(quad, pretty):
    comma = ", " if pretty else ","
    slots = [print_term(s, pretty) for s in (quad.nu, quad.kappa, quad.tau)]
    return "(" + comma.join(slots + [str(quad.j)]) + ")"
