"""
A four-dimensional example and its twisted table
================================================

The builtin ``paper-4dim`` table has e1 e1 = e2 and e1 e4 = e4 e1 = e4 with
the identity twist.  It is not Hom-Jacobi-Jordan; the checker says where.
"""

from homjj.algebra import check_hom_jacobi_jordan, check_morphism
from homjj.documents import builtin_example, paper_4dim_alpha, serialize
from homjj.search import random_eval_oracle

A = builtin_example("paper-4dim")
report = check_hom_jacobi_jordan(A)
print(report.describe())

# (e1 e1) e4 + (e1 e4) e1 + (e4 e1) e1 = 0 + e4 + e4: the first witness is (1,1,4)
print("first witness:", report.witnesses[0].describe())

# an independent check at random points gives the same verdict
print("random points:", random_eval_oracle(A, "hom-jacobi-jordan", trials=50, seed=0).verdict)

# the accompanying self-map is not an algebra morphism of the table
alpha = paper_4dim_alpha({"a12": 1, "a23": 0, "a14": 2, "a34": 0})
print(check_morphism(A, A, alpha).describe())

# the twisted table, with its parameters
T = builtin_example("paper-4dim-twisted", {"a12": 1, "a14": 2})
print(serialize(T))
print(check_hom_jacobi_jordan(T).verdict)
