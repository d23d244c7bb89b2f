"""Canonical JSON documents and the builtin example registry.

Algebra document::

    {"kind": "hom-algebra", "scalar_field": "Q", "dim": 2, "basis": ["e1", "e2"],
     "products": {"1,1": {"2": "1"}}, "alpha": [["1", "0"], ["0", "1"]]}

Products use 1-based "i,j" keys mapping to {k: coefficient}; zero entries are
omitted.  ``alpha`` is row-major, so column j holds alpha(e_j).  Canonical
text has sorted keys, two-space indentation, LF line endings and a trailing
newline, which makes ``serialize(parse(text)) == text`` for canonical input.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from .algebra import HomAlgebra
from .fields import Field, ScalarParseError, get_field
from .matched_pairs import MatchedPairData
from .report import CheckReport
from .representations import PreJJRepresentation, Representation

ALGEBRA_KIND = "hom-algebra"
REP_KINDS = {"hom-jj-representation": False, "hom-prejj-representation": True}
PAIR_KINDS = {"hom-jj-matched-pair": False, "hom-prejj-matched-pair": True}
OPERATOR_KINDS = ("rota-baxter", "o-operator", "nijenhuis", "morphism")
_PRODUCT_KEY = re.compile(r"(-?\d+),(-?\d+)")


class DocumentError(ValueError):
    """Schema violation; ``path`` points at the offending node (``$.products["1,2"]``)."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class OperatorDocument:
    """A linear operator read from JSON; entries stay text until a field is known."""

    kind: str
    matrix: tuple[tuple[str, ...], ...]
    weight: str = "0"

    def array(self, field: Field) -> np.ndarray:
        return _matrix(self.matrix, field, "$.matrix")

    def weight_value(self, field: Field):
        return _scalar(self.weight, field, "$.weight")


# -- serialization ----------------------------------------------------------------

def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def format_matrix(m: np.ndarray, field: Field | None = None) -> list[list[str]]:
    m = np.asarray(m)
    if field is not None:
        m = field.reduce(m)
    return [[str(v) for v in row] for row in m.tolist()]


def _stack(arr: np.ndarray, field: Field) -> list:
    return [format_matrix(mat, field) for mat in arr]


def algebra_to_dict(A: HomAlgebra) -> dict:
    products: dict[str, dict[str, str]] = {}
    for i, j, k in np.argwhere(A.c != 0):
        products.setdefault(f"{i + 1},{j + 1}", {})[str(k + 1)] = str(A.c[i, j, k])
    return {
        "alpha": format_matrix(A.alpha, A.field),
        "basis": list(A.labels),
        "dim": A.dim,
        "kind": ALGEBRA_KIND,
        "products": products,
        "scalar_field": A.field.name,
    }


def representation_to_dict(R: Representation) -> dict:
    f = R.field
    out = {"base": algebra_to_dict(R.base), "phi": format_matrix(R.phi, f), "rho": _stack(R.rho, f)}
    if isinstance(R, PreJJRepresentation):
        out["kind"] = "hom-prejj-representation"
        out["lambda"] = _stack(R.lam, f)
    else:
        out["kind"] = "hom-jj-representation"
    return out


def matched_pair_to_dict(M: MatchedPairData) -> dict:
    f = M.field
    out = {"A1": algebra_to_dict(M.A1), "A2": algebra_to_dict(M.A2),
           "rho1": _stack(M.rho1, f), "rho2": _stack(M.rho2, f)}
    if M.kind == "prejj":
        out["kind"] = "hom-prejj-matched-pair"
        out["lambda1"] = _stack(M.lam1, f)
        out["lambda2"] = _stack(M.lam2, f)
    else:
        out["kind"] = "hom-jj-matched-pair"
    return out


def operator_to_dict(kind: str, matrix, weight="0", field: Field | None = None) -> dict:
    if kind not in OPERATOR_KINDS:
        raise ValueError(f"unknown operator kind {kind!r}")
    return {"kind": kind, "matrix": format_matrix(matrix, field), "weight": str(weight)}


def to_dict(obj) -> dict:
    if isinstance(obj, HomAlgebra):
        return algebra_to_dict(obj)
    if isinstance(obj, Representation):
        return representation_to_dict(obj)
    if isinstance(obj, MatchedPairData):
        return matched_pair_to_dict(obj)
    if isinstance(obj, OperatorDocument):
        return {"kind": obj.kind, "matrix": [list(r) for r in obj.matrix], "weight": obj.weight}
    if isinstance(obj, CheckReport):
        return obj.to_dict()
    raise TypeError(f"no document form for {type(obj).__name__}")


def serialize(obj) -> str:
    return canonical_json(to_dict(obj))


# -- parsing ----------------------------------------------------------------------------

def _expect(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise DocumentError(path, message)


def _field_of(doc: Mapping, path: str) -> Field:
    tag = doc.get("scalar_field")
    _expect(isinstance(tag, str), f"{path}.scalar_field", "missing or not a string")
    try:
        return get_field(tag)
    except ValueError as exc:
        raise DocumentError(f"{path}.scalar_field", str(exc)) from None


def _scalar(value, field: Field, path: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DocumentError(path, f"scalar must be a string or integer, got {type(value).__name__}")
    try:
        return field.coerce(value)
    except (ScalarParseError, ValueError, TypeError) as exc:
        raise DocumentError(path, str(exc)) from None


def _matrix(rows, field: Field, path: str, shape: tuple[int, int] | None = None) -> np.ndarray:
    _expect(isinstance(rows, (list, tuple)) and all(isinstance(r, (list, tuple)) for r in rows),
            path, "matrix must be a list of rows")
    if shape is not None:
        _expect(len(rows) == shape[0], path, f"expected {shape[0]} rows, got {len(rows)}")
    width = len(rows[0]) if rows else 0
    out = field.zeros((len(rows), width))
    for r, row in enumerate(rows):
        _expect(len(row) == width, f"{path}[{r}]", "ragged matrix")
        if shape is not None:
            _expect(len(row) == shape[1], f"{path}[{r}]", f"expected {shape[1]} columns, got {len(row)}")
        for s, value in enumerate(row):
            out[r, s] = _scalar(value, field, f"{path}[{r}][{s}]")
    return out


def _matrix_list(value, field: Field, path: str, count: int, size: int) -> np.ndarray:
    _expect(isinstance(value, list), path, "expected a list of matrices")
    _expect(len(value) == count, path, f"expected {count} matrices, got {len(value)}")
    out = field.zeros((count, size, size))
    for i, mat in enumerate(value):
        out[i] = _matrix(mat, field, f"{path}[{i}]", (size, size))
    return out


def _reject_duplicates(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise DocumentError(f"key {key!r}", "duplicate key")
        seen[key] = value
    return seen


def _load_json(text: str | bytes) -> Any:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError("$", f"not UTF-8: {exc}") from None
    try:
        return json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"invalid JSON: {exc}") from None


def algebra_from_dict(doc: Any, path: str = "$") -> HomAlgebra:
    _expect(isinstance(doc, dict), path, "expected an object")
    _expect(doc.get("kind") == ALGEBRA_KIND, f"{path}.kind", f"expected {ALGEBRA_KIND!r}")
    field = _field_of(doc, path)
    dim = doc.get("dim")
    _expect(isinstance(dim, int) and not isinstance(dim, bool) and dim >= 1, f"{path}.dim",
            "dim must be a positive integer")
    labels = doc.get("basis", [f"e{i + 1}" for i in range(dim)])
    _expect(isinstance(labels, list) and len(labels) == dim and all(isinstance(s, str) for s in labels),
            f"{path}.basis", f"expected {dim} string labels")
    _expect(len(set(labels)) == dim, f"{path}.basis", "labels must be distinct")
    products = doc.get("products", {})
    _expect(isinstance(products, dict), f"{path}.products", "expected an object")
    c = field.zeros((dim, dim, dim))
    for key, terms in products.items():
        kpath = f"{path}.products[{key!r}]"
        m = _PRODUCT_KEY.fullmatch(key)
        _expect(m is not None, kpath, 'product keys look like "i,j"')
        i, j = int(m.group(1)), int(m.group(2))
        _expect(1 <= i <= dim and 1 <= j <= dim, kpath, f"basis index out of range 1..{dim}")
        _expect(isinstance(terms, dict), kpath, "expected an object {k: coefficient}")
        for k, value in terms.items():
            _expect(k.lstrip("-").isdigit() and 1 <= int(k) <= dim, f"{kpath}[{k!r}]",
                    f"basis index out of range 1..{dim}")
            c[i - 1, j - 1, int(k) - 1] = _scalar(value, field, f"{kpath}[{k!r}]")
    alpha = doc.get("alpha")
    alpha = field.eye(dim) if alpha is None else _matrix(alpha, field, f"{path}.alpha", (dim, dim))
    extra = set(doc) - {"kind", "scalar_field", "dim", "basis", "products", "alpha"}
    _expect(not extra, path, f"unknown keys {sorted(extra)}")
    return HomAlgebra(field, field.reduce(c), field.reduce(alpha), labels)


def _algebra_ref(value, path: str, base_dir: Path | None) -> HomAlgebra:
    """An inline algebra object or a path (relative to the referring document) to one."""
    if isinstance(value, str):
        target = Path(value) if base_dir is None else base_dir / value
        try:
            text = target.read_bytes()
        except OSError as exc:
            raise DocumentError(path, f"cannot read {value!r}: {exc.strerror}") from None
        return algebra_from_dict(_load_json(text), path)
    return algebra_from_dict(value, path)


def representation_from_dict(doc: Mapping, path: str = "$", base_dir: Path | None = None) -> Representation:
    kind = doc.get("kind")
    _expect(kind in REP_KINDS, f"{path}.kind", f"expected one of {sorted(REP_KINDS)}")
    A = _algebra_ref(doc.get("base"), f"{path}.base", base_dir)
    f = A.field
    rho = doc.get("rho")
    _expect(isinstance(rho, list) and rho and isinstance(rho[0], list), f"{path}.rho",
            "expected a list of matrices")
    m = len(rho[0])
    rho = _matrix_list(rho, f, f"{path}.rho", A.dim, m)
    phi = doc.get("phi")
    phi = f.eye(m) if phi is None else _matrix(phi, f, f"{path}.phi", (m, m))
    if REP_KINDS[kind]:
        lam = _matrix_list(doc.get("lambda"), f, f"{path}.lambda", A.dim, m)
        return PreJJRepresentation(A, rho, lam, phi)
    return Representation(A, rho, phi)


def matched_pair_from_dict(doc: Mapping, path: str = "$", base_dir: Path | None = None) -> MatchedPairData:
    kind = doc.get("kind")
    _expect(kind in PAIR_KINDS, f"{path}.kind", f"expected one of {sorted(PAIR_KINDS)}")
    A1 = _algebra_ref(doc.get("A1"), f"{path}.A1", base_dir)
    A2 = _algebra_ref(doc.get("A2"), f"{path}.A2", base_dir)
    _expect(A1.field is A2.field, f"{path}.A2.scalar_field", "both algebras must share a field")
    f, n1, n2 = A1.field, A1.dim, A2.dim
    rho1 = _matrix_list(doc.get("rho1"), f, f"{path}.rho1", n1, n2)
    rho2 = _matrix_list(doc.get("rho2"), f, f"{path}.rho2", n2, n1)
    if PAIR_KINDS[kind]:
        lam1 = _matrix_list(doc.get("lambda1"), f, f"{path}.lambda1", n1, n2)
        lam2 = _matrix_list(doc.get("lambda2"), f, f"{path}.lambda2", n2, n1)
        return MatchedPairData(A1, A2, rho1, rho2, lam1, lam2)
    return MatchedPairData(A1, A2, rho1, rho2)


def operator_from_dict(doc: Mapping, path: str = "$") -> OperatorDocument:
    kind = doc.get("kind")
    _expect(kind in OPERATOR_KINDS, f"{path}.kind", f"expected one of {list(OPERATOR_KINDS)}")
    matrix = doc.get("matrix")
    _expect(isinstance(matrix, list) and all(isinstance(r, list) for r in matrix), f"{path}.matrix",
            "matrix must be a list of rows")
    weight = doc.get("weight", "0")
    _expect(isinstance(weight, (str, int)) and not isinstance(weight, bool), f"{path}.weight",
            "weight must be a scalar string")
    return OperatorDocument(kind, tuple(tuple(str(v) for v in r) for r in matrix), str(weight))


def from_dict(doc: Any, base_dir: Path | None = None):
    _expect(isinstance(doc, dict), "$", "expected a JSON object")
    kind = doc.get("kind")
    if kind == ALGEBRA_KIND:
        return algebra_from_dict(doc)
    if kind in REP_KINDS:
        return representation_from_dict(doc, base_dir=base_dir)
    if kind in PAIR_KINDS:
        return matched_pair_from_dict(doc, base_dir=base_dir)
    if kind in OPERATOR_KINDS:
        return operator_from_dict(doc)
    raise DocumentError("$.kind", f"unknown document kind {kind!r}")


def parse_document(data: str | bytes, base_dir: str | Path | None = None):
    """Validated typed object from JSON text: HomAlgebra, Representation, MatchedPairData or OperatorDocument."""
    return from_dict(_load_json(data), Path(base_dir) if base_dir is not None else None)


def load_document(path: str | Path):
    path = Path(path)
    return parse_document(path.read_bytes(), path.parent)


# -- builtin examples -------------------------------------------------------------------

PAPER_PARAMS = ("a12", "a23", "a14", "a34")


def _paper_params(field: Field, params: Mapping[str, Any]) -> dict:
    unknown = set(params) - set(PAPER_PARAMS)
    if unknown:
        raise ValueError(f"unknown parameter(s) {sorted(unknown)}; expected {list(PAPER_PARAMS)}")
    return {k: field.coerce(params.get(k, 0)) for k in PAPER_PARAMS}


def paper_4dim_alpha(params: Mapping[str, Any] | None = None, field: Field | str = "Q") -> np.ndarray:
    """The printed self-map of the 4-dimensional example; column j is alpha(e_j)."""
    f = get_field(field)
    p = _paper_params(f, params or {})
    cols = [
        [-1, 0, -1, 0],
        [p["a12"], 1, 0, 2],
        [1, p["a23"], 1, 0],
        [p["a14"], -1, p["a34"], -1],
    ]
    return f.reduce(f.array(cols).T.copy())


def builtin_example(name: str, params: Mapping[str, Any] | None = None,
                    field: Field | str = "Q") -> HomAlgebra:
    """Named example algebra.  ``abelian-<n>``, ``a2``, ``j3``, ``paper-4dim`` or ``paper-4dim-twisted``."""
    f = get_field(field)
    params = dict(params or {})
    if name.startswith("abelian-"):
        size = name.split("-", 1)[1]
        if not size.isdigit() or int(size) < 1:
            raise ValueError(f"bad dimension in {name!r}")
        _no_params(name, params)
        return HomAlgebra.abelian(f, int(size))
    if name == "a2":
        _no_params(name, params)
        return HomAlgebra.from_table(f, 2, {(1, 1): {2: 1}})
    if name == "j3":
        _no_params(name, params)
        return HomAlgebra.from_table(f, 3, {(1, 2): {3: 1}, (2, 1): {3: 1}})
    if name == "paper-4dim":
        # the untwisted table, alpha = id; the parameters only enter the twist
        _paper_params(f, params)
        return HomAlgebra.from_table(f, 4, {(1, 1): {2: 1}, (1, 4): {4: 1}, (4, 1): {4: 1}})
    if name == "paper-4dim-twisted":
        p = _paper_params(f, params)
        alpha = paper_4dim_alpha(params, f)
        e4_term = {1: p["a14"], 2: -1, 3: p["a34"], 4: -1}
        table = {(1, 1): {1: p["a12"], 2: 1, 4: 2}, (1, 4): e4_term, (4, 1): dict(e4_term)}
        return HomAlgebra.from_table(f, 4, table, alpha)
    raise ValueError(f"unknown example {name!r}; choose abelian-<n>, a2, j3, paper-4dim or paper-4dim-twisted")


def _no_params(name: str, params: Mapping) -> None:
    if params:
        raise ValueError(f"example {name!r} takes no parameters")


BUILTIN_NAMES = ("abelian-1", "abelian-2", "abelian-3", "a2", "j3", "paper-4dim", "paper-4dim-twisted")
