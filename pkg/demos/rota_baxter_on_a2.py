"""
Rota-Baxter operators on the two-dimensional algebra e1 e1 = e2
================================================================

"""

import numpy as np

from homjj import HomAlgebra, QQ
from homjj.algebra import anticommutator, check_left_hom_pre_jj, check_rota_baxter
from homjj.operators import induce_prejj_from_oop, lift_hat_T, prejj_from_rota_baxter
from homjj.representations import regular_rep
from homjj.search import SearchSpec, count, enumerate_operators

# The algebra: a single nonzero product, twist = identity
A = HomAlgebra.from_table("Q", 2, {(1, 1): {2: 1}})
P = QQ.array([[2, 0], [0, 1]])

# P(e1) P(e1) = 4 e2 and P(2 P(e1) e1) = P(4 e2) = 4 e2, so this should pass
print(check_rota_baxter(A, P, 0).describe())

# x.y = P(x) y is a left pre-JJ product; only e1.e1 = 2 e2 survives
B = prejj_from_rota_baxter(A, P)
print("e1.e1 =", B.product(A.basis(0), A.basis(0)))
print(check_left_hom_pre_jj(B).describe())

# the same product comes out of the O-operator machinery on the regular module
induced = induce_prejj_from_oop(regular_rep(A), P)
print("same as O-operator route:", induced.module_algebra == B)
print("anticommutator e1*e1 =", anticommutator(B).c[0, 0])

# lifting P to the semidirect product gives another Rota-Baxter operator
hat, report = lift_hat_T(regular_rep(A), P)
print(hat)
print(report.describe())

# Over F5 the weight-zero operators form the family P(e2) in span(e2), a(a - 2d) = 0
A5 = HomAlgebra.from_table("F5", 2, {(1, 1): {2: 1}})
found = list(enumerate_operators(A5, SearchSpec(target="rota-baxter")))
print(len(found), "operators over F5")
print(np.array(found[:5]))
