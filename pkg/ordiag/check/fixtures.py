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

"""Hand-checked diagrams and rope descriptors for N = 4.

With 1 = f(0,0) and w = f(0,f(0,0)):

  TOP    = d_p^{(3, p, p, 3)} 3
  SECOND = d_TOP^{(2, p, TOP, 3)} w
  MERGED = d_SECOND^{(d_{SECOND^+}(w+2), SECOND, SECOND, 2), (1, p, TOP, 3)} w^2
  RESUMED = d_MERGED^{(d_{SECOND^+}(w+1), SECOND, MERGED, 2), (1, p, SECOND, 3)} w^3

MERGED is the collapse after a single 2-knot: In = {2, 3}, pd_3 = TOP and
rg_2 = pd_2 = SECOND.  RESUMED continues below it, so rg_2 is inherited from
MERGED (rg_2 = SECOND while pd_2 = MERGED).
"""

from ordiag.notation import term
from ordiag.util import od_data
from ordiag.util.od_data import PI, RopeDescriptor, SynthInputs

N = 4
ONE = term.ONE
OMEGA_ONE = term.OMEGA_POWER_ONE

# The smallest collapse with a Q part, and one below it.
SMALL_TOP = term.mk_d(PI, [term.mk_quad(ONE, PI, PI, 3)], ONE)
SMALL_SECOND = term.mk_d(
    SMALL_TOP, [term.mk_quad(od_data.ZERO, PI, SMALL_TOP, 3)], term.nat(2)
)

TOP = term.mk_d(PI, [term.mk_quad(term.nat(3), PI, PI, 3)], term.nat(3))
SECOND = term.mk_d(TOP, [term.mk_quad(term.nat(2), PI, TOP, 3)], OMEGA_ONE)


def _st(body):
    return term.mk_d(term.mk_rsucc(SECOND), od_data.EMPTY_Q, body)


OMEGA_PLUS_TWO = term.mk_sum([OMEGA_ONE, ONE, ONE])
OMEGA_PLUS_ONE = term.mk_sum([OMEGA_ONE, ONE])

MERGED = term.mk_d(
    SECOND,
    [
        term.mk_quad(_st(OMEGA_PLUS_TWO), SECOND, SECOND, 2),
        term.mk_quad(ONE, PI, TOP, 3),
    ],
    term.omega_power(term.nat(2)),
)
RESUMED = term.mk_d(
    MERGED,
    [
        term.mk_quad(_st(OMEGA_PLUS_ONE), SECOND, MERGED, 2),
        term.mk_quad(ONE, PI, SECOND, 3),
    ],
    term.omega_power(term.nat(3)),
)

MERGE_ROPE = RopeDescriptor(
    N=N, sigmas=(PI, TOP, SECOND), knot_numbers=(0, 1), knot_indices=(2,)
)
MERGE_INPUTS = SynthInputs(
    body=term.omega_power(term.nat(2)), st_top=ONE, st_lower={2: OMEGA_PLUS_TWO}
)

RESUMED_ROPE = RopeDescriptor(
    N=N, sigmas=(PI, TOP, SECOND, MERGED), knot_numbers=(1, 2), knot_indices=(2,)
)
RESUMED_INPUTS = SynthInputs(
    body=term.omega_power(term.nat(3)), st_top=ONE, st_lower={2: OMEGA_PLUS_ONE}
)
# Reuses MERGED's st_2 body, so st_2 fails to decrease.
STALE_INPUTS = SynthInputs(
    body=term.omega_power(term.nat(3)), st_top=ONE, st_lower={2: OMEGA_PLUS_TWO}
)

# The rope with no collapses: synthesis gives SMALL_TOP.
BARE_ROPE = RopeDescriptor(N=N, sigmas=(PI,), knot_numbers=(), knot_indices=())
BARE_INPUTS = SynthInputs(body=ONE, st_top=ONE)
