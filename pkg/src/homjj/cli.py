"""Command line front end: ``homjj verify|construct|check-op|search|example``.

Exit status is 0 for PASS (or any successful construction), 1 for FAIL and 2
for unusable input.  Every file argument may be ``-`` to read standard input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algebra as alg
from . import documents as docs
from . import operators as ops
from . import representations as reps
from .algebra import HomAlgebra, PreconditionError, UnsupportedCharacteristic
from .fields import QQ, get_field
from .linalg import ShapeError, SingularMatrixError
from .matched_pairs import (MatchedPairData, bicross_sum_jj, bicross_sum_prejj, check_matched_pair,
                            subadjacent_matched_pair)
from .report import CheckReport, combine
from .representations import PreJJRepresentation, Representation
from .search import (ALGEBRA_CHECKERS, SearchSpec, enumerate_algebras, enumerate_morphisms,
                     enumerate_operators, random_eval_oracle, search_records)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- input helpers ------------------------------------------------------------------

def read_document(arg: str, stdin=None):
    if arg == "-":
        stream = stdin if stdin is not None else sys.stdin.buffer
        return docs.parse_document(stream.read(), Path.cwd())
    try:
        return docs.load_document(arg)
    except OSError as exc:
        raise UsageError(f"cannot read {arg}: {exc.strerror}") from None


def _want(obj, kind, arg: str):
    if not isinstance(obj, kind):
        names = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise UsageError(f"{arg}: expected a {names} document, got {type(obj).__name__}")
    return obj


def _operator_matrix(arg: str, field, stdin=None):
    op = _want(read_document(arg, stdin), docs.OperatorDocument, arg)
    return op, op.array(field)


def _emit_report(report: CheckReport, as_json: bool, out) -> int:
    out.write(docs.canonical_json(report.to_dict()) if as_json else report.describe() + "\n")
    return EXIT_PASS if report.passed else EXIT_FAIL


# -- verify ------------------------------------------------------------------------------

ALGEBRA_VERIFY = dict(ALGEBRA_CHECKERS, **{"jj-admissibility": alg.jj_admissibility_obstruction})
REP_VERIFY = ("representation", "dual-involution", "triple-equivalence")
PAIR_VERIFY = ("matched-pair", "bicross", "subadjacent")


def _verify(obj, prop: str | None, oracle: bool, trials: int, seed: int) -> CheckReport:
    if isinstance(obj, HomAlgebra):
        prop = prop or "hom-jacobi-jordan"
        if prop not in ALGEBRA_VERIFY:
            raise UsageError(f"unknown algebra property {prop!r}; choose from {sorted(ALGEBRA_VERIFY)}")
        if oracle:
            return random_eval_oracle(obj, prop, trials, seed)
        return ALGEBRA_VERIFY[prop](obj)
    if isinstance(obj, Representation):
        prejj = isinstance(obj, PreJJRepresentation)
        prop = prop or "representation"
        if prop in ("jj-representation", "prejj-representation"):
            prop = "representation"
        if prop not in REP_VERIFY:
            raise UsageError(f"unknown representation property {prop!r}; choose from {list(REP_VERIFY)}")
        if oracle:
            if prop != "representation":
                raise UsageError("--oracle only evaluates the representation axioms")
            return random_eval_oracle(obj, "prejj-representation" if prejj else "jj-representation",
                                      trials, seed)
        if prop == "representation":
            return reps.check_prejj_rep(obj) if prejj else reps.check_jj_rep(obj)
        if not prejj:
            raise UsageError(f"{prop} needs a pre-JJ representation")
        return reps.check_dual_involution(obj) if prop == "dual-involution" else reps.triple_equivalence_report(obj)
    if isinstance(obj, MatchedPairData):
        prop = prop or "matched-pair"
        if prop not in PAIR_VERIFY:
            raise UsageError(f"unknown matched-pair property {prop!r}; choose from {list(PAIR_VERIFY)}")
        if oracle:
            raise UsageError("--oracle is not available for matched pairs")
        if prop == "matched-pair":
            return check_matched_pair(obj)
        if prop == "bicross":
            if obj.kind == "jj":
                return alg.check_hom_jacobi_jordan(bicross_sum_jj(obj))
            return alg.check_left_hom_pre_jj(bicross_sum_prejj(obj))
        if obj.kind != "prejj":
            raise UsageError("subadjacent needs a pre-JJ matched pair")
        return _renamed(check_matched_pair(subadjacent_matched_pair(obj)), "subadjacent-matched-pair")
    raise UsageError(f"verify does not apply to {type(obj).__name__} documents")


def _renamed(report: CheckReport, name: str) -> CheckReport:
    return CheckReport(name, report.passed, report.witnesses, report.checked, report.details)


def cmd_verify(args, out, stdin) -> int:
    obj = read_document(args.file, stdin)
    return _emit_report(_verify(obj, args.property, args.oracle, args.trials, args.seed), args.json, out)


# -- construct ---------------------------------------------------------------------------

def cmd_construct(args, out, stdin) -> int:
    what = args.construction
    first = read_document(args.input, stdin)
    if what in ("twist", "nijenhuis-deform", "rb-prejj"):
        A = _want(first, HomAlgebra, args.input)
        if not args.operator:
            raise UsageError(f"construct {what} needs an operator document")
        _, M = _operator_matrix(args.operator, A.field, stdin)
        if what == "twist":
            result = alg.yau_twist(A, M, args.power)
        elif what == "nijenhuis-deform":
            result = alg.nijenhuis_deform(A, M)
        else:
            result = ops.prejj_from_rota_baxter(A, M)
    elif what in ("anticommutator", "opposite"):
        A = _want(first, HomAlgebra, args.input)
        result = alg.anticommutator(A) if what == "anticommutator" else alg.opposite(A)
    elif what == "coadjoint-double":
        A = _want(first, HomAlgebra, args.input)
        result = reps.prejj_coadjoint_double(A) if args.prejj else reps.coadjoint_double(A)
    elif what == "semidirect":
        R = _want(first, Representation, args.input)
        result = reps.semidirect_prejj(R) if isinstance(R, PreJJRepresentation) else reps.semidirect_jj(R)
    elif what == "dual-rep":
        R = _want(first, Representation, args.input)
        result = reps.dual_rep_prejj(R) if isinstance(R, PreJJRepresentation) else reps.dual_rep_jj(R)
    elif what == "bicross":
        M = _want(first, MatchedPairData, args.input)
        result = bicross_sum_jj(M) if M.kind == "jj" else bicross_sum_prejj(M)
    elif what == "oop-induce":
        R = _want(first, Representation, args.input)
        if not args.operator:
            raise UsageError("construct oop-induce needs an operator document")
        _, T = _operator_matrix(args.operator, R.field, stdin)
        result = ops.induce_prejj_from_oop(R, T).module_algebra
    else:  # argparse restricts the choices
        raise UsageError(f"unknown construction {what!r}")
    text = docs.serialize(result)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8", newline="\n")
    else:
        out.write(text)
    return EXIT_PASS


# -- check-op ------------------------------------------------------------------------------

def cmd_check_op(args, out, stdin) -> int:
    target = read_document(args.target, stdin)
    if args.kind == "o-operator":
        R = _want(target, Representation, args.target)
        _, T = _operator_matrix(args.operator, R.field, stdin)
        report = ops.check_o_operator(R, T)
        if args.equivalences:
            _, lifted = ops.lift_hat_T(R, T)
            report = combine("o-operator-equivalences", [
                report, ops.graph_subalgebra_check(R, T), lifted,
                _renamed(alg.nijenhuis_check(ops._semidirect(R), ops.n_T_matrix(R, T)), "n_T-nijenhuis"),
            ])
        return _emit_report(report, args.json, out)
    A = _want(target, HomAlgebra, args.target)
    op, M = _operator_matrix(args.operator, A.field, stdin)
    if args.kind == "rota-baxter":
        weight = A.field.coerce(args.weight) if args.weight is not None else op.weight_value(A.field)
        report = alg.check_rota_baxter(A, M, weight)
    else:
        report = alg.nijenhuis_check(A, M)
    return _emit_report(report, args.json, out)


# -- search -------------------------------------------------------------------------------

def cmd_search(args, out, stdin) -> int:
    spec = SearchSpec(target=args.target, field=args.field, dim=args.dim,
                      predicates=tuple(args.predicate or ()), alpha=args.alpha,
                      commutative=not args.noncommutative, weight=args.weight,
                      budget=args.budget, sample=args.sample, seed=args.seed)
    if args.target == "algebra":
        stream = enumerate_algebras(spec)
    else:
        if not args.algebra:
            raise UsageError(f"search --target {args.target} needs --algebra")
        source = read_document(args.algebra, stdin)
        if args.target == "o-operator":
            R = _want(source, Representation, args.algebra)
            stream = enumerate_operators(R.base, spec, rep=R)
        else:
            A = _want(source, HomAlgebra, args.algebra)
            if A.field.name != args.field:
                raise UsageError(f"--field {args.field} differs from the algebra's field {A.field.name}")
            if args.target == "morphism":
                B = _want(read_document(args.codomain), HomAlgebra, args.codomain) if args.codomain else A
                stream = enumerate_morphisms(A, B, spec)
            else:
                stream = enumerate_operators(A, spec)
    found = 0
    for record in search_records(stream):
        found += 1
        if not args.count:
            out.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")
    if args.count:
        out.write(json.dumps({"count": found, "examined": stream.examined, "total": stream.total,
                              "truncated": stream.truncated}, sort_keys=True) + "\n")
    elif stream.truncated:
        sys.stderr.write(f"budget exhausted after {stream.examined} of {stream.total} candidates\n")
    return EXIT_PASS


# -- example -------------------------------------------------------------------------------

def _parse_params(items) -> dict:
    params = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"--param expects key=value, got {item!r}")
        params[key] = value
    return params


def cmd_example(args, out, stdin) -> int:
    field = get_field(args.field)
    params = {k: field.coerce(v) for k, v in _parse_params(args.param).items()}
    out.write(docs.serialize(docs.builtin_example(args.name, params, field)))
    return EXIT_PASS


# -- parser ---------------------------------------------------------------------------------

CONSTRUCTIONS = ("twist", "anticommutator", "opposite", "semidirect", "dual-rep", "coadjoint-double",
                 "bicross", "nijenhuis-deform", "oop-induce", "rb-prejj")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="homjj", description="Check and build Hom-Jacobi-Jordan "
                                     "and Hom-pre-Jacobi-Jordan structures.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify", help="check a property of an algebra, representation or matched pair")
    p.add_argument("file", help="document path or - for stdin")
    p.add_argument("--property", "-p")
    p.add_argument("--json", action="store_true", help="emit the report as canonical JSON")
    p.add_argument("--oracle", action="store_true", help="use random-point evaluation instead of basis tuples")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build a new structure and print its document")
    p.add_argument("construction", choices=CONSTRUCTIONS)
    p.add_argument("input", help="algebra, representation or matched-pair document")
    p.add_argument("operator", nargs="?", help="operator document (twist, nijenhuis-deform, rb-prejj, oop-induce)")
    p.add_argument("--power", type=int, default=1, help="exponent n of the twist beta^n")
    p.add_argument("--prejj", action="store_true", help="coadjoint-double: use the pre-JJ coadjoint module")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check-op", help="check an operator against an algebra or representation")
    p.add_argument("kind", choices=("rota-baxter", "o-operator", "nijenhuis"))
    p.add_argument("target", help="algebra (rota-baxter, nijenhuis) or representation (o-operator)")
    p.add_argument("operator", help="operator document")
    p.add_argument("--weight", help="override the operator document's weight")
    p.add_argument("--equivalences", action="store_true",
                   help="o-operator: also report graph, lifted and N_T verdicts")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_op)

    p = sub.add_parser("search", help="enumerate structures over a small prime field (JSON lines)")
    p.add_argument("--target", default="algebra",
                   choices=("algebra", "morphism", "rota-baxter", "nijenhuis", "o-operator"))
    p.add_argument("--field", default="F5")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--predicate", action="append", help="algebra property to require (repeatable)")
    p.add_argument("--alpha", default="id", choices=("id", "all"))
    p.add_argument("--noncommutative", action="store_true", help="include non-symmetric tables")
    p.add_argument("--weight", type=int, default=0)
    p.add_argument("--budget", type=int, default=10 ** 8)
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--algebra", help="algebra (or representation for o-operator) to search on")
    p.add_argument("--codomain", help="morphism target algebra (defaults to --algebra)")
    p.add_argument("--count", action="store_true", help="print only a summary count")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("example", help="print a builtin example algebra")
    p.add_argument("name", help="abelian-<n>, a2, j3, paper-4dim or paper-4dim-twisted")
    p.add_argument("--param", action="append", help="k=v, e.g. a12=1/2")
    p.add_argument("--field", default=QQ.name)
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None, out=None, stdin=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return args.func(args, out, stdin)
    except PreconditionError as exc:
        if exc.report is not None:
            out.write(f"precondition failed: {exc}\n")
            return _emit_report(exc.report, getattr(args, "json", False), out)
        sys.stderr.write(f"homjj: {exc}\n")
        return EXIT_USAGE
    except (UsageError, docs.DocumentError, UnsupportedCharacteristic, SingularMatrixError,
            ShapeError, ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"homjj: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
