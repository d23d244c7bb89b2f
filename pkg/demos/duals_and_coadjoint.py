"""
Dual modules and the coadjoint double
=====================================

"""

from fractions import Fraction

from homjj import HomAlgebra
from homjj.algebra import check_hom_jacobi_jordan, check_left_hom_pre_jj
from homjj.representations import (check_dual_involution, check_jj_rep, coadjoint_double, coadjoint_rep,
                                   dual_rep_prejj, prejj_coadjoint_double, regular_prejj_rep,
                                   triple_equivalence_report)

# e1 e1 = e2 with twist diag(2, 4): the twist must be invertible for duals
A = HomAlgebra.from_table("Q", 2, {(1, 1): {2: 1}}, [[2, 0], [0, 4]])
print(check_hom_jacobi_jordan(A).verdict)

R = coadjoint_rep(A)
print(check_jj_rep(R).describe())
print("dual twist:", R.phi.tolist())
assert R.phi[0][0] == Fraction(1, 2)

D = coadjoint_double(A)
print("A + A*:", check_hom_jacobi_jordan(D).verdict)

# the same table is also left pre-JJ; dualize its regular module twice
P = regular_prejj_rep(A)
print(check_dual_involution(P).describe())
print(triple_equivalence_report(P).describe())
print("pre-JJ double:", check_left_hom_pre_jj(prejj_coadjoint_double(A)).verdict)
print("dual lambda:", dual_rep_prejj(P).lam.tolist())
