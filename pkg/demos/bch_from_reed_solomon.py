"""
Binary BCH codes as subfield-subcodes of Reed-Solomon codes
===========================================================

A Reed-Solomon code over GF(16) is the GT code of U = {0, ..., k-1} on the
one-dimensional torus. Its binary subfield-subcode only keeps the cyclotomic
cosets lying wholly inside U, so the dimension jumps as k crosses coset
boundaries.
"""

from gtsubfield import ExponentSet, all_cosets, build_field, subfield_basis, subfield_subcode
from gtsubfield.subfield import dual_subfield_code
from gtsubfield.weights import pair_distances

field = build_field(2, 4)  # modulus x^4 + x + 1
print(field)

###############################################################################
# The cosets of Z_15 under multiplication by 2

for c in all_cosets(field, 1):
    print(f"I_{c.leader[0]} = {[m[0] for m in c.members]}")

###############################################################################
# Basis polynomials for k = 11: I_0, I_1 and I_5 fit inside {0..10}

U = ExponentSet([[i] for i in range(11)], field, 1)
for f in subfield_basis(U):
    print(f.format("x"))

###############################################################################
# Parameters of D for every k

for k in range(1, 16):
    U = ExponentSet([[i] for i in range(k)], field, 1)
    D, Dp = subfield_subcode(U), dual_subfield_code(U)
    rd, _ = pair_distances(D, Dp)
    print(f"k={k:2d}  RS [15,{k},{16 - k}]  ->  D [{D.n},{D.k},{rd.d}]")
