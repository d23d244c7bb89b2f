import numpy as np
import pytest

from homjj import batch
from homjj.algebra import HomAlgebra, check_hom_jacobi_jordan
from homjj.documents import BUILTIN_NAMES, builtin_example
from homjj.fields import GF
from homjj.representations import regular_rep, zero_rep
from homjj.search import (ALGEBRA_CHECKERS, ALGEBRA_PROPERTIES, SearchSpec, algebra_candidate_count,
                          count, enumerate_algebras, enumerate_morphisms, enumerate_operators,
                          random_eval_oracle)


def idempotent(field="Q"):
    return HomAlgebra.from_table(field, 1, {(1, 1): {1: 1}})


def test_oracle_abelian_passes_everything():
    A = HomAlgebra.abelian("Q", 3)
    for prop in ALGEBRA_PROPERTIES:
        for seed in (0, 1, 99):
            assert random_eval_oracle(A, prop, trials=10, seed=seed)


def test_oracle_idempotent_fails_jacobi():
    report = random_eval_oracle(idempotent(), "hom-jacobi-jordan", trials=50, seed=42)
    assert not report
    assert report.details["hom-jacobi"] == "FAIL"
    assert report.details["commutative"] == "PASS"


def test_oracle_unknown_property():
    with pytest.raises(ValueError):
        random_eval_oracle(idempotent(), "lie", trials=3)


def test_oracle_is_reproducible():
    A = idempotent()
    assert random_eval_oracle(A, "hom-associative", 20, 7) == random_eval_oracle(A, "hom-associative", 20, 7)


def test_oracle_agrees_on_builtins():
    for name in BUILTIN_NAMES:
        A = builtin_example(name.replace("-n", "-3"))
        for prop in ALGEBRA_PROPERTIES:
            basis = ALGEBRA_CHECKERS[prop](A).passed
            assert random_eval_oracle(A, prop, 50, 0).passed == basis, (name, prop)


def test_oracle_on_reps_and_operators():
    A = HomAlgebra.from_table("Q", 2, {(1, 1): {2: 1}})
    assert random_eval_oracle(regular_rep(A), "jj-representation")
    assert random_eval_oracle((A, [[2, 0], [0, 1]]), "rota-baxter")
    assert not random_eval_oracle((A, [[1, 0], [0, 1]]), "rota-baxter")
    assert random_eval_oracle((regular_rep(A), [[2, 0], [0, 1]]), "o-operator")
    assert random_eval_oracle((zero_rep(A, 2), np.zeros((2, 2), dtype=int)), "o-operator")
    with pytest.raises(ValueError):
        random_eval_oracle(regular_rep(A), "prejj-representation")


def test_f2_and_f3_dim1_counts():
    spec = SearchSpec(field="F2", dim=1, predicates=("hom-jacobi-jordan",))
    assert count(enumerate_algebras(spec)) == 1
    # over F3 the residual 3 e1 vanishes, and e1e1 = 2e1 passes too
    assert count(enumerate_algebras(SearchSpec(field="F3", dim=1, predicates=("hom-jacobi-jordan",)))) == 3


@pytest.mark.parametrize("field,dim,alpha", [("F2", 1, "id"), ("F3", 1, "all"), ("F2", 2, "id")])
def test_raw_candidate_count(field, dim, alpha):
    spec = SearchSpec(field=field, dim=dim, alpha=alpha, commutative=False)
    p = spec.p
    assert algebra_candidate_count(spec) == p ** (dim ** 3) * (1 if alpha == "id" else p ** (dim * dim))
    assert count(enumerate_algebras(spec)) == algebra_candidate_count(spec)


def test_f5_dim2_hom_jj_count_and_recheck():
    algebras = list(enumerate_algebras(SearchSpec(predicates=("hom-jacobi-jordan",))))
    assert len(algebras) == 25
    assert all(check_hom_jacobi_jordan(A) for A in algebras)


def test_enumeration_is_deterministic():
    spec = SearchSpec(field="F3", dim=2, predicates=("left-hom-pre-jj",), commutative=False)
    first = [A.c.tolist() for A in enumerate_algebras(spec)]
    second = [A.c.tolist() for A in enumerate_algebras(spec)]
    assert first == second and first


def test_budget_truncates():
    stream = enumerate_algebras(SearchSpec(field="F5", dim=2, budget=100))
    assert stream.truncated
    assert count(stream) == 100
    assert stream.examined == 100


def test_sampling_required_for_dim3():
    with pytest.raises(ValueError):
        SearchSpec(dim=3)
    stream = enumerate_algebras(SearchSpec(dim=3, sample=500, seed=1, predicates=("commutative",)))
    assert count(stream) == 500


def test_spec_validation():
    with pytest.raises(ValueError):
        SearchSpec(field="Q")
    with pytest.raises(ValueError):
        SearchSpec(predicates=("nonsense",))
    with pytest.raises(ValueError):
        SearchSpec(target="group")


def test_rota_baxter_counts():
    A = HomAlgebra.from_table("F5", 2, {(1, 1): {2: 1}})
    assert count(enumerate_operators(A, SearchSpec(target="rota-baxter"))) == 45
    assert count(enumerate_operators(idempotent("F3"), SearchSpec(target="rota-baxter", field="F3", dim=1))) == 1
    Z = HomAlgebra.abelian("F2", 2)
    assert count(enumerate_operators(Z, SearchSpec(target="rota-baxter", field="F2"))) == 16


def test_morphism_counts():
    D = idempotent("F3")
    maps = [m.tolist() for m in enumerate_morphisms(D, D, SearchSpec(target="morphism", field="F3", dim=1))]
    assert maps == [[[0]], [[1]]]
    A = HomAlgebra.from_table("F5", 2, {(1, 1): {2: 1}})
    found = [m.tolist() for m in enumerate_morphisms(A, A, SearchSpec(target="morphism"))]
    assert [[1, 0], [0, 1]] in found and [[0, 0], [0, 0]] in found


def test_o_operator_search_matches_checker():
    F = GF(3)
    A = HomAlgebra.from_table(F, 2, {(1, 1): {2: 1}})
    R = regular_rep(A)
    found = list(enumerate_operators(A, SearchSpec(target="o-operator", field="F3"), rep=R))
    rb = list(enumerate_operators(A, SearchSpec(target="rota-baxter", field="F3")))
    # alpha = id, so every Rota-Baxter operator commutes with the twist
    assert [m.tolist() for m in found] == [m.tolist() for m in rb]
    with pytest.raises(ValueError):
        enumerate_operators(A, SearchSpec(target="o-operator", field="F3"))


def test_batch_predicates_agree_with_checkers():
    rng = np.random.default_rng(0)
    F = GF(5)
    tables = rng.integers(0, 5, (300, 2, 2, 2))
    # mix in structured tables so that PASS verdicts occur
    tables[:100] = 0
    tables[:100, 0, 0, 1] = rng.integers(0, 5, 100)
    alphas = rng.integers(0, 5, (300, 2, 2))
    alphas[::2] = np.eye(2, dtype=np.int64)
    for name, fn in batch.ALGEBRA_PREDICATES.items():
        verdicts = fn(tables, alphas, 5)
        for k in range(0, 300, 7):
            assert verdicts[k] == ALGEBRA_CHECKERS[name](HomAlgebra(F, tables[k], alphas[k])).passed, name
