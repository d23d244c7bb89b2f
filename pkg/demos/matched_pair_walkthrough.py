"""
Matched pairs from a split algebra
==================================

Split a small nilpotent algebra into two subalgebras, read off how each
half acts on the other, and rebuild the whole from the bicrossed sum.
"""

import numpy as np

from homjj.algebra import check_hom_jacobi_jordan
from homjj.generators import corrupt_matched_pair, random_matched_pair
from homjj.matched_pairs import bicross_sum_jj, check_matched_pair_jj

rng = np.random.default_rng(3)
M = random_matched_pair(rng, dims=(2, 2))
print("rho1 =", M.rho1.tolist())
print("rho2 =", M.rho2.tolist())

report = check_matched_pair_jj(M)
print(report.describe())

S = bicross_sum_jj(M)
print("bicrossed sum:", check_hom_jacobi_jordan(S).verdict)

# flip one sign in the actions: both sides of the equivalence should now fail
bad = corrupt_matched_pair(rng, M)
if bad is not None:
    print(check_matched_pair_jj(bad).describe())
    print(check_hom_jacobi_jordan(bicross_sum_jj(bad)).describe())
