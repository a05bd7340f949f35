"""
Cross-checking the coset basis
==============================

The coset-polynomial basis of D_U is compared against two routes that share
none of its machinery: brute linear algebra on C_U expanded over F_p, and
the trace of the dual GT code.
"""

import numpy as np

from gtsubfield import ExponentSet, build_field, subfield_subcode, subfield_subcode_oracle
from gtsubfield.exponents import full_lattice
from gtsubfield.linalg import same_row_space_mod_p
from gtsubfield.subfield import delsarte_trace_rows, dual_subfield_code, same_row_space

rng = np.random.default_rng(0)
field = build_field(3, 2)
H = full_lattice(field, 2)

###############################################################################
# Random exponent sets, mostly not unions of cosets

for trial in range(5):
    U = ExponentSet(H[rng.random(len(H)) < 0.5].tolist(), field, 2)
    D = subfield_subcode(U)
    oracle = subfield_subcode_oracle(U)
    trace_span = delsarte_trace_rows(U)
    print(
        f"|U|={len(U):2d} closed={U.coset_closed!s:5}  dim D={D.k:2d}",
        " oracle agrees:", same_row_space(D, oracle),
        " trace of dual GT code spans D⊥:",
        same_row_space_mod_p(trace_span, dual_subfield_code(U).residues(), 3),
    )
