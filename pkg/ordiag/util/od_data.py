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

"""Data types for ordinal diagrams, Q parts, reports and rope descriptors.

This is limited to purely data and type annotations; the operations live in
ordiag.notation.
"""

import dataclasses
import enum
from typing import Mapping, Optional, Tuple


class Term:
    """Base class of the ordinal diagram term algebra.

    Instances are immutable and compare structurally.  Canonical forms are only
    produced by the constructors in ordiag.notation.term; building the classes
    directly skips normalization and is reserved for that module and the parser.
    """

    __slots__ = ()


@dataclasses.dataclass(frozen=True)
class Zero(Term):
    pass


@dataclasses.dataclass(frozen=True)
class Omega(Term):
    """The least recursively regular diagram."""


@dataclasses.dataclass(frozen=True)
class Pi(Term):
    """The top regular diagram; every collapse lies below it."""


@dataclasses.dataclass(frozen=True)
class Sum(Term):
    """A natural sum of at least two additively principal parts."""

    parts: Tuple[Term, ...]


@dataclasses.dataclass(frozen=True)
class Phi(Term):
    """The binary Veblen function; Phi(Zero(), b) is omega to the b."""

    first: Term
    second: Term


@dataclasses.dataclass(frozen=True)
class RSucc(Term):
    """The next regular diagram above `base`."""

    base: Term


@dataclasses.dataclass(frozen=True)
class Quad:
    """One quadruple (nu, kappa, tau, j) of a Q part."""

    nu: Term
    kappa: Term
    tau: Term
    j: int


@dataclasses.dataclass(frozen=True)
class QPart:
    """The Q part of a collapse: quadruples in strictly increasing j order."""

    quads: Tuple[Quad, ...] = ()

    def __len__(self):
        return len(self.quads)

    def __iter__(self):
        return iter(self.quads)

    def __bool__(self):
        return bool(self.quads)

    def __getitem__(self, index):
        return self.quads[index]


EMPTY_Q = QPart()


@dataclasses.dataclass(frozen=True)
class D(Term):
    """The collapse of `body` below the regular `sub`, decorated with `q`."""

    sub: Term
    q: QPart
    body: Term


ZERO = Zero()
OMEGA = Omega()
PI = Pi()


class Ordering(int, enum.Enum):
    LT = -1
    EQ = 0
    GT = 1


@dataclasses.dataclass(frozen=True)
class ClassFlags:
    """Membership in P (additive principal), SC (strongly critical), R (regular)."""

    in_p: bool
    in_sc: bool
    in_r: bool


@dataclasses.dataclass(frozen=True)
class QView:
    """The values pd_j, st_j, rg_j of a collapse at one index j.

    st and rg are both None when in_j is undefined.
    """

    pd: Term
    st: Optional[Term]
    rg: Optional[Term]
    defined_in: bool


@dataclasses.dataclass(frozen=True)
class Check:
    label: str
    passed: bool
    detail: str = ""


@dataclasses.dataclass(frozen=True)
class ValidityReport:
    """Pass/fail results of the named conditions for one candidate diagram."""

    subject: Term
    checks: Tuple[Check, ...] = ()

    @property
    def valid(self):
        return all(check.passed for check in self.checks)

    def failures(self):
        return [check for check in self.checks if not check.passed]


@dataclasses.dataclass(frozen=True)
class RopeDescriptor:
    """An abstract rope: subscripts sigma_0..sigma_n, knot numbers and indices.

    knot_numbers is n_0 < ... < n_l = n - 1 and knot_indices is i_0..i_{l-1}.
    The degenerate rope with sigmas == (PI,) has no knots at all.
    """

    N: int
    sigmas: Tuple[Term, ...]
    knot_numbers: Tuple[int, ...]
    knot_indices: Tuple[int, ...]

    @property
    def top(self):
        return len(self.sigmas) - 1

    @property
    def knot_count(self):
        """Returns l, the number of knots (0 for the degenerate rope)."""
        return max(len(self.knot_numbers) - 1, 0)


@dataclasses.dataclass(frozen=True)
class SynthInputs:
    """Caller-supplied values for synthesis.

    body is the body of the new collapse, st_top the value of st_{N-1}, and
    st_lower maps each lower index i to the body of st_i = d_{rg_i^+}(...).
    """

    body: Term
    st_top: Term
    st_lower: Mapping[int, Term] = dataclasses.field(default_factory=dict)
