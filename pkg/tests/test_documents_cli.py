import io
import json
import subprocess
import sys

import numpy as np
import pytest

from homjj.algebra import HomAlgebra, anticommutator
from homjj.cli import main
from homjj.documents import (BUILTIN_NAMES, DocumentError, OperatorDocument, builtin_example,
                             canonical_json, load_document, operator_to_dict, paper_4dim_alpha,
                             parse_document, serialize)
from homjj.fields import QQ
from homjj.generators import random_matched_pair
from homjj.representations import regular_prejj_rep, regular_rep


def run(*argv, stdin=None):
    out = io.StringIO()
    code = main(list(argv), out=out, stdin=io.BytesIO(stdin.encode()) if stdin is not None else None)
    return code, out.getvalue()


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else serialize(obj), encoding="utf-8")
    return str(path)


A2_DOC = {"kind": "hom-algebra", "scalar_field": "Q", "dim": 2, "basis": ["e1", "e2"],
          "products": {"1,1": {"2": "1"}}, "alpha": [["1", "0"], ["0", "1"]]}


def test_minimal_documents():
    A = parse_document(json.dumps({"kind": "hom-algebra", "scalar_field": "Q", "dim": 1, "basis": ["e1"],
                                   "products": {}, "alpha": [["1"]]}))
    assert A == HomAlgebra.abelian("Q", 1)
    assert parse_document(json.dumps(A2_DOC)) == builtin_example("a2")


@pytest.mark.parametrize("mutate,fragment", [
    (lambda d: d["products"].update({"0,1": {"1": "1"}}), "$.products"),
    (lambda d: d["products"].update({"1,2": {"3": "1"}}), "$.products"),
    (lambda d: d.update(alpha=[["1", "0"]]), "$.alpha"),
    (lambda d: d.update(scalar_field="R"), "$.scalar_field"),
    (lambda d: d["products"]["1,1"].update({"2": "x"}), "$.products"),
    (lambda d: d.update(extra=1), "$"),
])
def test_schema_errors_are_path_addressed(mutate, fragment):
    doc = json.loads(json.dumps(A2_DOC))
    mutate(doc)
    with pytest.raises(DocumentError) as info:
        parse_document(json.dumps(doc))
    assert fragment in str(info.value)


def test_duplicate_keys_rejected():
    text = ('{"kind": "hom-algebra", "scalar_field": "Q", "dim": 1, "basis": ["e1"], '
            '"products": {"1,1": {"1": "1"}, "1,1": {"1": "2"}}, "alpha": [["1"]]}')
    with pytest.raises(DocumentError):
        parse_document(text)


def test_canonical_round_trip_of_builtins():
    for name in BUILTIN_NAMES:
        text = serialize(builtin_example(name))
        assert text.endswith("\n") and "\r" not in text
        assert serialize(parse_document(text)) == text
        again = json.loads(text)
        assert canonical_json(again) == text


def test_round_trip_of_reps_pairs_and_operators():
    A = builtin_example("a2")
    rng = np.random.default_rng(1)
    objects = [regular_rep(A), regular_prejj_rep(A), random_matched_pair(rng),
               random_matched_pair(rng, prejj=True), anticommutator(A)]
    for obj in objects:
        text = serialize(obj)
        assert parse_document(text) == obj
        assert serialize(parse_document(text)) == text
    op = parse_document(canonical_json(operator_to_dict("rota-baxter", QQ.array([[2, 0], [0, 1]]))))
    assert isinstance(op, OperatorDocument)
    assert op.array(QQ).tolist() == [[2, 0], [0, 1]]


def test_algebra_referenced_by_relative_path(tmp_path):
    write(tmp_path, "a2.json", builtin_example("a2"))
    rep = json.loads(serialize(regular_rep(builtin_example("a2"))))
    rep["base"] = "a2.json"
    path = write(tmp_path, "rep.json", json.dumps(rep))
    assert load_document(path) == regular_rep(builtin_example("a2"))


def test_paper_examples():
    A = builtin_example("paper-4dim")
    assert A.c[0, 0, 1] == 1 and A.c[0, 3, 3] == 1 and A.c[3, 0, 3] == 1
    assert np.count_nonzero(A.c) == 3
    alpha = paper_4dim_alpha({"a12": 1})
    assert alpha[:, 1].tolist() == [1, 1, 0, 2]
    B = builtin_example("paper-4dim-twisted", {"a12": 1, "a34": 2})
    assert B.c[0, 0].tolist() == [1, 1, 0, 2]
    assert B.c[0, 3].tolist() == [0, -1, 2, -1]
    with pytest.raises(ValueError):
        builtin_example("paper-4dim", {"b": 1})
    with pytest.raises(ValueError):
        builtin_example("a2", {"a12": 1})
    with pytest.raises(ValueError):
        builtin_example("nope")


def test_verify_exit_codes(tmp_path):
    a2 = write(tmp_path, "a2.json", builtin_example("a2"))
    assert run("verify", a2, "--property", "hom-jacobi-jordan")[0] == 0
    d1 = write(tmp_path, "d1.json", HomAlgebra.from_table("Q", 1, {(1, 1): {1: 1}}))
    code, text = run("verify", d1, "--property", "hom-jacobi-jordan")
    assert code == 1 and "(1,1,1)" in text
    assert run("verify", str(tmp_path / "missing.json"))[0] == 2
    assert run("verify", a2, "--property", "lie")[0] == 2
    assert run("frobnicate")[0] == 2


def test_verify_json_and_oracle(tmp_path):
    d1 = write(tmp_path, "d1.json", HomAlgebra.from_table("Q", 1, {(1, 1): {1: 1}}))
    code, text = run("verify", d1, "--property", "hom-jacobi-jordan", "--json")
    report = json.loads(text)
    assert code == 1 and report["verdict"] == "FAIL"
    assert text == canonical_json(report)
    assert run("verify", d1, "--property", "hom-jacobi-jordan", "--oracle", "--seed", "42")[0] == 1


def test_example_piped_into_verify():
    _, doc = run("example", "paper-4dim")
    code, text = run("verify", "-", "--property", "hom-jacobi-jordan", stdin=doc)
    assert code == 1
    assert "(1,1,4)" in text
    assert run("verify", "-", "--property", "hom-jacobi-jordan", stdin=doc) == (code, text)


def test_construct_and_check_op(tmp_path):
    a2 = write(tmp_path, "a2.json", builtin_example("a2"))
    op = write(tmp_path, "p.json", canonical_json(operator_to_dict("rota-baxter", QQ.array([[2, 0], [0, 1]]))))
    assert run("check-op", "rota-baxter", a2, op)[0] == 0
    code, text = run("construct", "rb-prejj", a2, op)
    assert code == 0
    B = parse_document(text)
    assert B.c[0, 0, 1] == 2
    assert run("verify", write(tmp_path, "b.json", text), "--property", "left-hom-pre-jj")[0] == 0
    rep = write(tmp_path, "rep.json", regular_rep(builtin_example("a2")))
    assert run("check-op", "o-operator", rep, op, "--equivalences")[0] == 0
    ident = write(tmp_path, "i.json", canonical_json(operator_to_dict("rota-baxter", QQ.eye(2))))
    assert run("check-op", "rota-baxter", a2, ident)[0] == 1
    assert run("check-op", "rota-baxter", a2, ident, "--weight", "-1")[0] == 0
    out = tmp_path / "semi.json"
    assert run("construct", "semidirect", rep, "-o", str(out))[0] == 0
    assert run("verify", str(out), "--property", "hom-jacobi-jordan")[0] == 0


def test_construct_every_verb(tmp_path):
    a2 = write(tmp_path, "a2.json", builtin_example("a2"))
    rep = write(tmp_path, "rep.json", regular_prejj_rep(builtin_example("a2")))
    pair = write(tmp_path, "pair.json", random_matched_pair(np.random.default_rng(0)))
    op = write(tmp_path, "p.json", canonical_json(operator_to_dict("o-operator", QQ.array([[2, 0], [0, 1]]))))
    inv = write(tmp_path, "g.json", canonical_json(operator_to_dict("nijenhuis", QQ.array([[2, 0], [0, 2]]))))
    beta = write(tmp_path, "b.json", canonical_json(operator_to_dict("morphism", QQ.array([[2, 0], [0, 4]]))))
    cases = [("anticommutator", a2), ("opposite", a2), ("semidirect", rep), ("bicross", pair),
             ("twist", a2, beta), ("nijenhuis-deform", a2, inv), ("oop-induce", rep, op),
             ("rb-prejj", a2, op), ("coadjoint-double", a2), ("dual-rep", rep)]
    for verb, *files in cases:
        code, text = run("construct", verb, *files)
        assert code == 0, verb
        assert serialize(parse_document(text)) == text
    assert run("construct", "coadjoint-double", a2, "--prejj")[0] == 0
    assert run("construct", "twist", a2)[0] == 2


def test_search_verb():
    code, text = run("search", "--predicate", "hom-jacobi-jordan", "--count")
    assert code == 0 and json.loads(text)["count"] == 25
    code, text = run("search", "--field", "F2", "--dim", "1", "--predicate", "hom-jacobi-jordan")
    lines = text.splitlines()
    assert len(lines) == 1 and json.loads(lines[0])["products"] == {}


def test_search_operators(tmp_path):
    A = write(tmp_path, "a.json", HomAlgebra.from_table("F5", 2, {(1, 1): {2: 1}}))
    code, text = run("search", "--target", "rota-baxter", "--algebra", A, "--count")
    assert json.loads(text)["count"] == 45
    code, text = run("search", "--target", "rota-baxter", "--algebra", A, "--field", "F3")
    assert code == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "homjj", "example", "a2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert parse_document(proc.stdout) == builtin_example("a2")
