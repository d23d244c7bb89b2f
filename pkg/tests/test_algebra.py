import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from homjj.algebra import (HomAlgebra, PreconditionError, UnsupportedCharacteristic, anti_hom_associator,
                           anticommutator, check_anti_hom_associative, check_commutative,
                           check_hom_associative, check_hom_jacobi_jordan, check_hom_jordan,
                           check_left_hom_pre_jj, check_morphism, check_multiplicative,
                           check_right_hom_pre_jj, hom_jacobian, jj_admissibility_obstruction,
                           nijenhuis_check, nijenhuis_deform, opposite, transport, yau_twist)
from homjj.fields import GF, QQ
from homjj.generators import random_invertible, random_jj_algebra, random_prejj_algebra
from homjj.linalg import ShapeError


def a2(alpha=None, field="Q"):
    return HomAlgebra.from_table(field, 2, {(1, 1): {2: 1}}, alpha)


def idempotent(alpha=None, field="Q"):
    return HomAlgebra.from_table(field, 1, {(1, 1): {1: 1}}, alpha)


def abelian(n=2, alpha=None):
    return HomAlgebra.abelian("Q", n, alpha)


def test_construction_rejects_bad_shapes():
    with pytest.raises(ShapeError):
        HomAlgebra(QQ, QQ.zeros((2, 2, 3)))
    with pytest.raises(ValueError):
        HomAlgebra(QQ, QQ.zeros((2, 2, 2)), QQ.eye(3))
    with pytest.raises(IndexError):
        HomAlgebra.from_table("Q", 2, {(0, 1): {1: 1}})


def test_arrays_are_read_only():
    A = a2()
    with pytest.raises(ValueError):
        A.c[0, 0, 0] = 5


def test_multiplicative_examples():
    assert check_multiplicative(abelian(2, [[1, 2], [3, 4]]))
    assert check_multiplicative(a2())
    swap = a2([[0, 1], [1, 0]])
    report = check_multiplicative(swap)
    assert not report
    w = report.witnesses[0]
    assert w.indices == (1, 1)
    assert list(w.residual) == [1, 0]  # alpha(e2) - alpha(e1)alpha(e1) = e1


def test_commutative_examples():
    assert check_commutative(a2())
    assert check_commutative(abelian())
    lop = HomAlgebra.from_table("Q", 2, {(1, 2): {1: 1}})
    report = check_commutative(lop)
    assert not report and report.witnesses[0].indices == (1, 2)


def test_hom_jacobian_values():
    e = lambda A, i: A.basis(i)  # noqa: E731
    assert not np.any(hom_jacobian(abelian(), [1, 2], [3, 4], [5, 6]) != 0)
    D = idempotent()
    assert hom_jacobian(D, e(D, 1), e(D, 1), e(D, 1)).tolist() == [3]
    A = a2()
    assert hom_jacobian(A, e(A, 1), e(A, 1), e(A, 1)).tolist() == [0, 0]


def test_hom_jacobi_jordan_verdicts():
    assert check_hom_jacobi_jordan(a2())
    report = check_hom_jacobi_jordan(idempotent())
    assert not report
    assert report.witnesses[0].indices == (1, 1, 1)
    assert list(report.witnesses[0].residual) == [3]


def test_report_invariant_fail_iff_witnesses():
    for A in (a2(), idempotent(), abelian()):
        r = check_hom_jacobi_jordan(A)
        assert r.passed == (len(r.witnesses) == 0)
        assert all(any(v != 0 for v in w.residual) for w in r.witnesses)


def test_hom_associative_examples():
    assert check_hom_associative(abelian())
    assert check_hom_associative(a2())
    # left multiplication table of e1: e1e1 = e1, e1e2 = e2 is associative
    table = HomAlgebra.from_table("Q", 2, {(1, 1): {1: 1}, (1, 2): {2: 1}})
    assert check_hom_associative(table)
    noassoc = HomAlgebra.from_table("Q", 2, {(1, 1): {2: 1}, (1, 2): {1: 1}})
    report = check_hom_associative(noassoc)
    # (e1e1)e1 - e1(e1e1) = e2e1 - e1e2 = -e1
    assert not report
    assert report.witnesses[0].indices == (1, 1, 1)
    assert list(report.witnesses[0].residual) == [-1, 0]


def test_anti_hom_associator_values():
    A, D = a2(), idempotent()
    assert anti_hom_associator(A, A.basis(1), A.basis(1), A.basis(1)).tolist() == [0, 0]
    assert anti_hom_associator(D, D.basis(1), D.basis(1), D.basis(1)).tolist() == [2]


def test_left_pre_jj_examples():
    assert check_left_hom_pre_jj(a2())
    report = check_left_hom_pre_jj(idempotent())
    assert not report and report.witnesses[0].indices == (1, 1, 1)
    assert list(report.witnesses[0].residual) == [4]


def test_anti_associative_is_left_and_right_pre_jj():
    # e1e2 = e3, e2e1 = -e3: every product of three elements vanishes
    A = HomAlgebra.from_table("Q", 3, {(1, 2): {3: 1}, (2, 1): {3: -1}})
    assert check_anti_hom_associative(A)
    assert check_left_hom_pre_jj(A) and check_right_hom_pre_jj(A)


def test_right_pre_jj_mirrors_left_via_opposite():
    rng = np.random.default_rng(7)
    for _ in range(10):
        P = random_prejj_algebra(rng)
        assert check_right_hom_pre_jj(opposite(P))
        assert check_right_hom_pre_jj(P).passed == check_left_hom_pre_jj(opposite(P)).passed
    assert not check_right_hom_pre_jj(idempotent())


def test_hom_associative_not_anti():
    # a Hom-associative algebra need not be anti-Hom-associative
    D = idempotent()
    assert check_hom_associative(D)
    assert not check_anti_hom_associative(D)


def test_hom_jordan():
    assert check_hom_jordan(abelian())
    assert check_hom_jordan(a2())
    with pytest.raises(UnsupportedCharacteristic):
        check_hom_jordan(a2(field="F3"))
    with pytest.raises(UnsupportedCharacteristic):
        check_hom_jordan(a2(field="F2"))
    assert check_hom_jordan(a2(field="F5"))


def test_hom_jordan_detects_failure():
    # dim-1 e1e1 = e1 is Jordan (associative commutative), so use a non-Jordan commutative table
    A = HomAlgebra.from_table("Q", 2, {(1, 1): {2: 1}, (1, 2): {1: 1}, (2, 1): {1: 1}})
    assert not check_hom_jordan(A)
    assert check_hom_jordan(idempotent())


def test_jj_admissibility():
    assert jj_admissibility_obstruction(abelian())
    assert jj_admissibility_obstruction(a2())
    assert check_hom_jacobi_jordan(anticommutator(a2()))
    D = idempotent()
    assert jj_admissibility_obstruction(D).passed == check_hom_jacobi_jordan(anticommutator(D)).passed
    with pytest.raises(PreconditionError) as info:
        jj_admissibility_obstruction(HomAlgebra.from_table("Q", 2, {(1, 1): {2: 1}, (1, 2): {1: 1}}))
    assert info.value.report is not None and not info.value.report


def test_admissibility_agrees_with_anticommutator_over_f5():
    from homjj.search import SearchSpec, enumerate_algebras
    spec = SearchSpec(field="F5", dim=2, predicates=("hom-associative",), commutative=False)
    seen = 0
    for A in enumerate_algebras(spec):
        seen += 1
        assert jj_admissibility_obstruction(A).passed == check_hom_jacobi_jordan(anticommutator(A)).passed
    assert seen > 0


def test_yau_twist_examples():
    A = a2()
    assert yau_twist(A, QQ.eye(2), 3) == A
    assert yau_twist(A, [[-1, 0], [0, 1]], 0) == A
    B = yau_twist(A, [[-1, 0], [0, 1]], 1)
    assert B.c[0, 0].tolist() == [0, 1]
    assert B.alpha.tolist() == [[-1, 0], [0, 1]]
    assert check_hom_jacobi_jordan(B)
    with pytest.raises(PreconditionError):
        yau_twist(A, [[0, 1], [1, 0]])


def test_yau_twist_of_jj_algebra_with_morphism():
    # a JJ algebra twisted by one of its morphisms is Hom-JJ
    J = HomAlgebra.from_table("Q", 3, {(1, 2): {3: 1}, (2, 1): {3: 1}})
    beta = QQ.array([[2, 0, 0], [0, 3, 0], [0, 0, 6]])
    assert check_morphism(J, J, beta)
    assert check_hom_jacobi_jordan(yau_twist(J, beta, 2))


def test_anticommutator_and_opposite():
    A = a2()
    assert np.array_equal(anticommutator(A).c, 2 * A.c)
    assert anticommutator(abelian()) == abelian()
    assert opposite(A) == A
    P = HomAlgebra.from_table("Q", 2, {(1, 1): {2: 1}, (1, 2): {2: 3}})
    assert opposite(opposite(P)) == P
    assert np.array_equal(opposite(P).c[1, 0], P.c[0, 1])


def test_morphism_examples():
    A = a2()
    assert check_morphism(A, A, QQ.eye(2))
    assert check_morphism(A, A, QQ.zeros((2, 2)))
    assert not check_morphism(A, A, [[2, 0], [0, 1]])
    with pytest.raises(ShapeError):
        check_morphism(A, abelian(3), QQ.eye(2))


def test_printed_self_map_of_four_dim_example_is_not_a_morphism():
    from homjj.documents import builtin_example, paper_4dim_alpha
    A = builtin_example("paper-4dim")
    report = check_morphism(A, A, paper_4dim_alpha())
    assert not report
    assert report.witnesses[0].indices == (1, 1)


def test_nijenhuis_examples():
    A = a2()
    assert nijenhuis_check(A, QQ.eye(2))
    assert nijenhuis_check(A, QQ.zeros((2, 2)))
    assert nijenhuis_check(A, 3 * QQ.eye(2))
    assert nijenhuis_deform(A, QQ.eye(2)) == A
    assert nijenhuis_deform(A, QQ.zeros((2, 2))) == HomAlgebra.abelian("Q", 2)
    D2 = nijenhuis_deform(A, 2 * QQ.eye(2))
    assert D2.c[0, 0].tolist() == [0, 2]  # 2xy + 2xy - 2xy
    assert check_hom_jacobi_jordan(D2)
    assert check_morphism(D2, A, 2 * QQ.eye(2))


def test_nijenhuis_deform_requires_nijenhuis():
    # projection onto e1: N(e1)N(e1) = e2 but N(2 e2 - N(e2)) = 0
    proj = [[1, 0], [0, 0]]
    report = nijenhuis_check(a2(), proj)
    assert not report and report.witnesses[0].indices == (1, 1)
    with pytest.raises(PreconditionError):
        nijenhuis_deform(a2(), proj)


def test_transport_preserves_verdicts():
    rng = np.random.default_rng(3)
    for _ in range(10):
        A = random_jj_algebra(rng, basis_change=False)
        g = random_invertible(rng, A.dim)
        B = transport(A, g)
        assert check_hom_jacobi_jordan(B)
        assert check_morphism(A, B, g)


vectors = st.lists(st.integers(-3, 3), min_size=3, max_size=3)


@settings(max_examples=40, deadline=None)
@given(vectors, vectors, vectors, vectors, st.integers(-3, 3), st.integers(-3, 3), st.integers(0, 10 ** 6))
def test_hom_jacobian_is_trilinear_and_cyclic(x, x2, y, z, a, b, seed):
    rng = np.random.default_rng(seed)
    A = HomAlgebra(QQ, QQ.array(rng.integers(-2, 3, (3, 3, 3)).tolist()),
                   QQ.array(rng.integers(-2, 3, (3, 3)).tolist()))
    x, x2, y, z = (QQ.array(v) for v in (x, x2, y, z))
    lhs = hom_jacobian(A, a * x + b * x2, y, z)
    assert np.array_equal(lhs, a * hom_jacobian(A, x, y, z) + b * hom_jacobian(A, x2, y, z))
    assert np.array_equal(hom_jacobian(A, x, y, z), hom_jacobian(A, y, z, x))
    lhs = anti_hom_associator(A, x, a * y + b * x2, z)
    assert np.array_equal(lhs, a * anti_hom_associator(A, x, y, z) + b * anti_hom_associator(A, x, x2, z))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_generated_algebras_satisfy_their_axioms(seed):
    rng = np.random.default_rng(seed)
    J = random_jj_algebra(rng)
    P = random_prejj_algebra(rng)
    assert check_hom_jacobi_jordan(J)
    assert check_hom_jordan(J)
    assert check_left_hom_pre_jj(P)
    assert check_hom_jacobi_jordan(anticommutator(P))


def test_direct_sum_of_finite_field_algebras():
    from homjj.algebra import direct_sum
    F = GF(5)
    S = direct_sum(a2(field=F), idempotent(field=F))
    assert S.dim == 3
    assert not check_hom_jacobi_jordan(S)
    assert check_hom_jacobi_jordan(direct_sum(a2(field=F), a2(field=F)))
