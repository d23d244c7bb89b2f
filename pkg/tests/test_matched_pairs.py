import numpy as np
import pytest

from homjj import batch
from homjj.algebra import (HomAlgebra, PreconditionError, anticommutator, check_hom_jacobi_jordan,
                           check_left_hom_pre_jj, direct_sum)
from homjj.fields import GF, QQ
from homjj.generators import corrupt_matched_pair, random_matched_pair
from homjj.matched_pairs import (MatchedPairData, bicross_sum_jj, bicross_sum_prejj, check_matched_pair,
                                 check_matched_pair_jj, check_matched_pair_prejj,
                                 dual_matched_pair_equivalence, subadjacent_matched_pair)
from homjj.representations import (PreJJRepresentation, Representation, semidirect_jj, semidirect_prejj)


def a2(field="Q"):
    return HomAlgebra.from_table(field, 2, {(1, 1): {2: 1}})


def same_tensors(A, B):
    assert np.array_equal(A.c, B.c) and np.array_equal(A.alpha, B.alpha)


def test_zero_actions_give_direct_sum():
    A1, A2 = HomAlgebra.abelian("Q", 1), a2()
    for prejj in (False, True):
        M = MatchedPairData.zero(A1, A2, prejj)
        assert check_matched_pair(M)
        S = bicross_sum_prejj(M) if prejj else bicross_sum_jj(M)
        assert np.array_equal(S.c, direct_sum(A1, A2).c)
        assert np.array_equal(S.alpha, direct_sum(A1, A2).alpha)


def test_shapes_and_fields_validated():
    A1, A2 = HomAlgebra.abelian("Q", 1), a2()
    with pytest.raises(Exception):
        MatchedPairData(A1, A2, QQ.zeros((2, 2, 2)), QQ.zeros((2, 1, 1)))
    with pytest.raises(ValueError):
        MatchedPairData(A1, a2("F5"), QQ.zeros((1, 2, 2)), QQ.zeros((2, 1, 1)))
    with pytest.raises(ValueError):
        MatchedPairData(A1, A2, QQ.zeros((1, 2, 2)), QQ.zeros((2, 1, 1)), QQ.zeros((1, 2, 2)))
    with pytest.raises(ValueError):
        bicross_sum_prejj(MatchedPairData.zero(A1, A2))


def test_failing_factor_is_reported_separately():
    D = HomAlgebra.from_table("Q", 1, {(1, 1): {1: 1}})
    report = check_matched_pair_jj(MatchedPairData.zero(D, a2()))
    assert not report
    assert report.details["A1-hom-jacobi-jordan"] == "FAIL"
    assert [k for k, v in report.details.items() if v == "FAIL"] == ["A1-hom-jacobi-jordan"]


@pytest.mark.parametrize("prejj", [False, True])
def test_random_pairs_and_corruptions(prejj):
    rng = np.random.default_rng(21 if prejj else 20)
    bicross = bicross_sum_prejj if prejj else bicross_sum_jj
    structural = check_left_hom_pre_jj if prejj else check_hom_jacobi_jordan
    corrupted = 0
    for _ in range(30):
        M = random_matched_pair(rng, prejj=prejj)
        assert check_matched_pair(M)
        assert structural(bicross(M))
        bad = corrupt_matched_pair(rng, M)
        if bad is None:
            continue
        corrupted += 1
        report = structural(bicross(bad))
        assert not report and report.witnesses
    assert corrupted >= 10


def test_semidirect_reduction():
    # abelian second factor with zero reverse action: bicross = semidirect product
    rng = np.random.default_rng(4)
    for _ in range(10):
        M = random_matched_pair(rng)
        A1 = M.A1
        V = HomAlgebra(QQ, QQ.zeros(M.A2.c.shape), M.A2.alpha)
        N = MatchedPairData(A1, V, M.rho1, QQ.zeros(M.rho2.shape))
        same_tensors(bicross_sum_jj(N), semidirect_jj(Representation(A1, M.rho1, V.alpha)))
        P = MatchedPairData(A1, V, M.rho1, QQ.zeros(M.rho2.shape), M.rho1, QQ.zeros(M.rho2.shape))
        same_tensors(bicross_sum_prejj(P), semidirect_prejj(PreJJRepresentation(A1, M.rho1, M.rho1, V.alpha)))


def test_subadjacent_square():
    rng = np.random.default_rng(8)
    for _ in range(20):
        M = random_matched_pair(rng, prejj=True)
        S = subadjacent_matched_pair(M)
        assert check_matched_pair_jj(S)
        assert bicross_sum_jj(S) == anticommutator(bicross_sum_prejj(M))


def test_subadjacent_needs_pass():
    rng = np.random.default_rng(9)
    bad = None
    while bad is None:
        bad = corrupt_matched_pair(rng, random_matched_pair(rng, prejj=True))
    with pytest.raises(PreconditionError):
        subadjacent_matched_pair(bad)


@pytest.mark.parametrize("prejj", [False, True])
def test_exhaustive_f5_dims_1_1(prejj):
    p = 5
    t = batch.all_arrays(p, (1, 1, 1))
    a = batch.all_arrays(p, (1, 1))
    structural = batch.left_hom_pre_jj if prejj else batch.hom_jacobi_jordan
    keep = structural(t[:, None], a[None], p)
    factors = [(t[i], a[j]) for i, j in np.argwhere(keep)]
    acts = batch.all_arrays(p, (1, 1, 1))
    for c1, a1 in factors:
        for c2, a2_ in factors:
            if prejj:
                r1, l1 = acts[:, None, None, None], acts[None, :, None, None]
                r2, l2 = acts[None, None, :, None], acts[None, None, None, :]
                mp = batch.matched_pair_prejj(c1, a1, c2, a2_, r1, l1, r2, l2, p)
            else:
                r1, r2 = acts[:, None], acts[None, :]
                l1, l2 = r1, r2
                mp = batch.matched_pair_jj(c1, a1, c2, a2_, r1, r2, p)
            tensor, twist = batch.bicross(c1, a1, c2, a2_, r1, l1, r2, l2, p)
            assert np.array_equal(mp, structural(tensor, twist, p))


def test_batch_agrees_with_checker():
    F = GF(5)
    rng = np.random.default_rng(3)
    A1 = HomAlgebra(F, [[[0]]], [[2]])
    A2 = a2("F5")
    for _ in range(60):
        r1 = rng.integers(0, 5, (1, 2, 2))
        r2 = rng.integers(0, 5, (2, 1, 1)) * rng.integers(0, 2)
        M = MatchedPairData(A1, A2, r1, r2)
        assert check_matched_pair_jj(M).passed == bool(
            batch.matched_pair_jj(A1.c, A1.alpha, A2.c, A2.alpha, r1, r2, 5))


def test_dual_equivalence():
    Z = HomAlgebra.abelian("Q", 2)
    report = dual_matched_pair_equivalence(Z, Z)
    assert report
    assert report.details == {"jj-matched-pair": "PASS", "prejj-matched-pair": "PASS"}
    assert dual_matched_pair_equivalence(a2(), Z)
    with pytest.raises(PreconditionError):
        dual_matched_pair_equivalence(a2(), HomAlgebra.abelian("Q", 2, [[2, 0], [0, 1]]))


def test_dual_equivalence_random_f5():
    F = GF(5)
    rng = np.random.default_rng(17)
    t = batch.all_arrays(5, (2, 2, 2))
    pre = t[batch.left_hom_pre_jj(t, np.eye(2, dtype=np.int64), 5)]
    for _ in range(30):
        A = HomAlgebra(F, pre[rng.integers(len(pre))])
        B = HomAlgebra(F, pre[rng.integers(len(pre))])
        assert dual_matched_pair_equivalence(A, B)
