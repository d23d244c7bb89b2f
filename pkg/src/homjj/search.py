"""Independent oracles: random-point identity evaluation and exhaustive enumeration over F_p.

The random oracle works with whole vectors and the product/twist maps only,
never with the basis-tuple residual kernels, so it is an independent
re-derivation of each identity.  The enumerators sweep candidate grids with
the vectorized verdicts of :mod:`homjj.batch` and confirm every survivor with
the corresponding single-instance checker before yielding it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import algebra as alg
from . import batch
from .algebra import HomAlgebra
from .fields import PrimeField, get_field
from .report import CheckReport, Witness
from .representations import PreJJRepresentation, Representation

MAX_CANDIDATES = 10 ** 8
CHUNK = 1 << 16


# -- random-point oracle -------------------------------------------------------------

def _prod(A: HomAlgebra, x, y):
    return A.product(x, y)


def _tw(A: HomAlgebra, x):
    return A.twist(x)


def _act(mats, x, v, field):
    """(sum_i x_i M_i) v."""
    mat = sum((xi * m for xi, m in zip(x, mats)), field.zeros(mats.shape[1:]))
    return field.reduce(mat @ v)


def _algebra_identities(A: HomAlgebra, prop: str) -> list[tuple[str, int, Callable]]:
    """(name, arity, residual function on random vectors) for an algebra property."""
    P = lambda x, y: _prod(A, x, y)  # noqa: E731
    a = lambda x: _tw(A, x)  # noqa: E731
    comm = ("commutative", 2, lambda x, y: P(x, y) - P(y, x))
    mult = ("multiplicative", 2, lambda x, y: a(P(x, y)) - P(a(x), a(y)))
    jac = ("hom-jacobi", 3, lambda x, y, z: P(P(x, y), a(z)) + P(P(y, z), a(x)) + P(P(z, x), a(y)))
    assoc = ("hom-associator", 3, lambda x, y, z: P(P(x, y), a(z)) - P(a(x), P(y, z)))
    anti = lambda x, y, z: P(P(x, y), a(z)) + P(a(x), P(y, z))  # noqa: E731
    table = {
        "commutative": [comm],
        "multiplicative": [mult],
        "hom-jacobi-jordan": [comm, mult, jac],
        "hom-associative": [mult, assoc],
        "anti-hom-associative": [mult, ("anti-hom-associator", 3, anti)],
        "left-hom-pre-jj": [mult, ("left-skew", 3, lambda x, y, z: anti(x, y, z) + anti(y, x, z))],
        "right-hom-pre-jj": [mult, ("right-skew", 3, lambda x, y, z: anti(x, y, z) + anti(x, z, y))],
        "hom-jordan": [comm, mult, ("hom-jordan-identity", 2,
                                    lambda x, y: P(P(P(x, x), a(y)), a(a(x))) - P(a(P(x, x)), P(a(y), a(x))))],
    }
    if prop not in table:
        raise KeyError(prop)
    return table[prop]


def _rep_identities(R: Representation, prop: str):
    A, f = R.base, R.field
    a = lambda x: _tw(A, x)  # noqa: E731
    phi = lambda v: f.reduce(R.phi @ v)  # noqa: E731
    rho = lambda x, v: _act(R.rho, x, v, f)  # noqa: E731

    def jj(prod):
        return [
            ("twist-compatible", ("a", "v"), lambda x, v: phi(rho(x, v)) - rho(a(x), phi(v))),
            ("action-identity", ("a", "a", "v"),
             lambda x, y, v: rho(prod(x, y), phi(v)) + rho(a(x), rho(y, v)) + rho(a(y), rho(x, v))),
        ]

    if prop == "jj-representation":
        return jj(lambda x, y: _prod(A, x, y))
    if prop == "prejj-representation":
        if not isinstance(R, PreJJRepresentation):
            raise KeyError(prop)
        lam = lambda x, v: _act(R.lam, x, v, f)  # noqa: E731
        star = lambda x, y: _prod(A, x, y) + _prod(A, y, x)  # noqa: E731
        return jj(star) + [
            ("lambda-twist-compatible", ("a", "v"), lambda x, v: phi(lam(x, v)) - lam(a(x), phi(v))),
            ("lambda-identity", ("a", "a", "v"),
             lambda x, y, v: lam(a(y), lam(x, v)) + lam(_prod(A, x, y), phi(v))
             + lam(a(y), rho(x, v)) + rho(a(x), lam(y, v))),
        ]
    raise KeyError(prop)


def _operator_identities(subject, prop: str):
    if prop in ("rota-baxter", "nijenhuis"):
        A, M = subject
        f = A.field
        M = f.array(M, (A.dim, A.dim))
        P = lambda x, y: _prod(A, x, y)  # noqa: E731
        m = lambda x: f.reduce(M @ x)  # noqa: E731
        commutes = ("commutes-with-twist", ("a",), lambda x: m(_tw(A, x)) - _tw(A, m(x)))
        if prop == "rota-baxter":
            return [("rota-baxter", ("a", "a"), lambda x, y: P(m(x), m(y)) - m(P(m(x), y) + P(x, m(y))))]
        return [commutes, ("nijenhuis-torsion", ("a", "a"),
                           lambda x, y: P(m(x), m(y)) - m(P(m(x), y) + P(x, m(y)) - m(P(x, y))))]
    if prop == "o-operator":
        R, T = subject
        f = R.field
        T = f.array(T, (R.base.dim, R.mdim))
        t = lambda v: f.reduce(T @ v)  # noqa: E731
        rho = lambda x, v: _act(R.rho, x, v, f)  # noqa: E731
        right = (lambda x, v: _act(R.lam, x, v, f)) if isinstance(R, PreJJRepresentation) else rho
        return [
            ("twist-compatible", ("v",), lambda v: t(f.reduce(R.phi @ v)) - _tw(R.base, t(v))),
            ("operator-identity", ("v", "v"),
             lambda u, v: _prod(R.base, t(u), t(v)) - t(rho(t(u), v) + right(t(v), u))),
        ]
    raise KeyError(prop)


ALGEBRA_PROPERTIES = ("commutative", "multiplicative", "hom-jacobi-jordan", "hom-associative",
                      "anti-hom-associative", "left-hom-pre-jj", "right-hom-pre-jj", "hom-jordan")
OTHER_PROPERTIES = ("jj-representation", "prejj-representation", "rota-baxter", "nijenhuis", "o-operator")


def random_eval_oracle(subject, property: str, trials: int = 50, seed: int = 0) -> CheckReport:
    """Evaluate an identity at ``trials`` seeded random points with coordinates in {-2, ..., 2}.

    ``subject`` is a HomAlgebra for algebra properties, a representation for
    representation properties, ``(A, P)`` for rota-baxter/nijenhuis and
    ``(R, T)`` for o-operator.  Witness indices are (trial number,).
    """
    if isinstance(subject, HomAlgebra):
        try:
            identities = [(n, ("a",) * k, fn) for n, k, fn in _algebra_identities(subject, property)]
        except KeyError:
            raise ValueError(f"unknown property {property!r}") from None
        A, module_dim = subject, 0
    elif isinstance(subject, Representation):
        try:
            identities = _rep_identities(subject, property)
        except KeyError:
            raise ValueError(f"unknown property {property!r}") from None
        A, module_dim = subject.base, subject.mdim
    else:
        try:
            identities = _operator_identities(subject, property)
        except KeyError:
            raise ValueError(f"unknown property {property!r}") from None
        first = subject[0]
        A = first.base if isinstance(first, Representation) else first
        module_dim = first.mdim if isinstance(first, Representation) else 0
    f = A.field
    rng = np.random.default_rng(seed)
    witnesses = []
    failing = {}
    for trial in range(trials):
        for name, slots, fn in identities:
            args = [f.array(rng.integers(-2, 3, size=A.dim if s == "a" else module_dim).tolist())
                    for s in slots]
            res = f.reduce(fn(*args))
            if np.any(res != 0):
                failing[name] = "FAIL"
                if len(witnesses) < 10:
                    witnesses.append(Witness((trial + 1,), tuple(f.to_python(v) for v in res), name))
    details = {name: failing.get(name, "PASS") for name, _, _ in identities}
    details["trials"] = trials
    details["seed"] = seed
    return CheckReport(f"random-eval:{property}", not witnesses, tuple(witnesses),
                       trials * len(identities), details)


# -- exhaustive enumeration -------------------------------------------------------------

@dataclass(frozen=True)
class SearchSpec:
    """What to enumerate.

    ``alpha`` is ``"id"`` (the identity twist only) or ``"all"`` (every
    matrix; dim <= 2 only).  ``commutative`` restricts algebra candidates to
    symmetric tables.  ``sample`` switches to seeded random sampling of that
    many candidates; it is required for dim >= 3.
    """

    target: str = "algebra"
    field: str = "F5"
    dim: int = 2
    predicates: tuple[str, ...] = ()
    alpha: str = "id"
    commutative: bool = True
    weight: int = 0
    budget: int = MAX_CANDIDATES
    sample: int | None = None
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "predicates", tuple(self.predicates))
        fld = get_field(self.field)
        if not isinstance(fld, PrimeField):
            raise ValueError("enumeration runs over a prime field")
        if self.target not in ("algebra", "morphism", "rota-baxter", "nijenhuis", "o-operator"):
            raise ValueError(f"unknown search target {self.target!r}")
        if self.alpha not in ("id", "all"):
            raise ValueError("alpha must be 'id' or 'all'")
        if self.target == "algebra":
            unknown = [p for p in self.predicates if p not in batch.ALGEBRA_PREDICATES]
            if unknown:
                raise ValueError(f"unknown predicates {unknown}")
            if self.dim >= 3 and self.sample is None:
                raise ValueError("dim >= 3 needs sampling (set sample)")
            if self.alpha == "all" and self.dim > 2:
                raise ValueError("alpha='all' is limited to dim <= 2")

    @property
    def p(self) -> int:
        return get_field(self.field).p


class SearchStream:
    """Iterator over search results; ``truncated`` becomes True when the budget cut the sweep."""

    def __init__(self, gen_factory, total: int, budget: int):
        self.total = total
        self.budget = budget
        self.truncated = total > budget
        self.examined = 0
        self._gen = gen_factory(self)

    def __iter__(self) -> Iterator:
        return self

    def __next__(self):
        return next(self._gen)


def algebra_candidate_count(spec: SearchSpec) -> int:
    n, p = spec.dim, spec.p
    tables = p ** (n * n * (n + 1) // 2) if spec.commutative else p ** (n ** 3)
    alphas = 1 if spec.alpha == "id" else p ** (n * n)
    return tables * alphas


def _table_chunks(spec: SearchSpec, limit: int):
    n, p = spec.dim, spec.p
    if spec.sample is not None:
        rng = np.random.default_rng(spec.seed)
        total = min(spec.sample, limit)
        for start in range(0, total, CHUNK):
            size = min(CHUNK, total - start)
            c = rng.integers(0, p, size=(size, n, n, n), dtype=np.int64)
            if spec.commutative:
                upper = np.triu(np.ones((n, n), dtype=bool))[None, :, :, None]
                c = np.where(upper, c, np.swapaxes(c, 1, 2))
            yield c
        return
    tables = batch.symmetric_tables(p, n) if spec.commutative else batch.all_arrays(p, (n, n, n))
    for start in range(0, min(len(tables), limit), CHUNK):
        yield tables[start:min(start + CHUNK, limit)]


def _alphas(spec: SearchSpec) -> np.ndarray:
    n, p = spec.dim, spec.p
    if spec.alpha == "id":
        return np.eye(n, dtype=np.int64)[None]
    return batch.all_arrays(p, (n, n))


ALGEBRA_CHECKERS = {
    "commutative": alg.check_commutative,
    "multiplicative": alg.check_multiplicative,
    "hom-jacobi-jordan": alg.check_hom_jacobi_jordan,
    "hom-associative": alg.check_hom_associative,
    "anti-hom-associative": alg.check_anti_hom_associative,
    "left-hom-pre-jj": alg.check_left_hom_pre_jj,
    "right-hom-pre-jj": alg.check_right_hom_pre_jj,
    "hom-jordan": alg.check_hom_jordan,
}


def enumerate_algebras(spec: SearchSpec) -> SearchStream:
    """Every table/twist candidate passing all predicates, in a fixed order.

    The order is twist-major (twists in lexicographic order of their
    entries), then tables in lexicographic order of their free entries.
    """
    fld = get_field(spec.field)
    total = spec.sample if spec.sample is not None else algebra_candidate_count(spec)
    if spec.sample is not None and spec.alpha == "all":
        total *= spec.p ** (spec.dim ** 2)

    def gen(stream: SearchStream):
        left = spec.budget
        for a in _alphas(spec):
            for chunk in _table_chunks(spec, left):
                stream.examined += len(chunk)
                left -= len(chunk)
                mask = np.ones(len(chunk), dtype=bool)
                for name in spec.predicates:
                    mask &= batch.ALGEBRA_PREDICATES[name](chunk, a, spec.p)
                for k in np.flatnonzero(mask):
                    A = HomAlgebra(fld, chunk[k], a)
                    if all(ALGEBRA_CHECKERS[name](A).passed for name in spec.predicates):
                        yield A
                if left <= 0:
                    return

    return SearchStream(gen, total, spec.budget)


def count(stream) -> int:
    return sum(1 for _ in stream)


def enumerate_operators(A: HomAlgebra, spec: SearchSpec, rep: Representation | None = None) -> SearchStream:
    """All matrices over F_p passing the operator check named by ``spec.target``.

    rota-baxter: weight ``spec.weight`` identity on A (n x n);
    nijenhuis: Nijenhuis operators on A (n x n);
    o-operator: O-operators T: V -> A for ``rep`` (n x m).
    """
    p = spec.p
    if A.field.modulus != p:
        raise ValueError("algebra and search field differ")
    if spec.target == "o-operator":
        if rep is None:
            raise ValueError("an O-operator search needs a representation")
        shape = (A.dim, rep.mdim)
    elif spec.target in ("rota-baxter", "nijenhuis"):
        shape = (A.dim, A.dim)
    else:
        raise ValueError(f"enumerate_operators cannot search {spec.target!r}")
    total = p ** (shape[0] * shape[1])

    def verdicts(mats):
        if spec.target == "rota-baxter":
            return batch.rota_baxter(A.c, mats, spec.weight % p, p)
        if spec.target == "nijenhuis":
            return batch.nijenhuis(A.c, A.alpha, mats, p)
        right = rep.lam if isinstance(rep, PreJJRepresentation) else rep.rho
        return batch.o_operator(A.c, A.alpha, mats, rep.rho, right, rep.phi, p)

    def confirm(m):
        from .operators import check_o_operator
        if spec.target == "rota-baxter":
            return alg.check_rota_baxter(A, m, spec.weight).passed
        if spec.target == "nijenhuis":
            return alg.nijenhuis_check(A, m).passed
        return check_o_operator(rep, m).passed

    return SearchStream(lambda s: _sweep(s, p, shape, total, spec.budget, verdicts, confirm), total, spec.budget)


def enumerate_morphisms(A: HomAlgebra, B: HomAlgebra, spec: SearchSpec) -> SearchStream:
    """All f: A -> B over F_p with f(xy) = f(x)f(y) and f alpha_A = alpha_B f."""
    p = spec.p
    shape = (B.dim, A.dim)
    total = p ** (shape[0] * shape[1])

    def verdicts(mats):
        return batch.morphism(A.c, A.alpha, B.c, B.alpha, mats, p)

    def confirm(m):
        return alg.check_morphism(A, B, m).passed

    return SearchStream(lambda s: _sweep(s, p, shape, total, spec.budget, verdicts, confirm), total, spec.budget)


def _sweep(stream, p, shape, total, budget, verdicts, confirm):
    size = shape[0] * shape[1]
    limit = min(total, budget)
    powers = p ** np.arange(size - 1, -1, -1, dtype=np.int64)
    for start in range(0, limit, CHUNK):
        idx = np.arange(start, min(start + CHUNK, limit), dtype=np.int64)
        mats = ((idx[:, None] // powers) % p).reshape((len(idx),) + shape)
        stream.examined += len(idx)
        for k in np.flatnonzero(verdicts(mats)):
            if confirm(mats[k]):
                yield mats[k].copy()


def search_records(stream) -> Iterator[dict]:
    """JSON-ready records of a stream (used by the CLI's JSON-lines output)."""
    from .documents import algebra_to_dict, format_matrix
    for item in stream:
        if isinstance(item, HomAlgebra):
            yield algebra_to_dict(item)
        else:
            yield {"matrix": format_matrix(item)}
