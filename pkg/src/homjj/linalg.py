"""Dense exact linear algebra over a :class:`~homjj.fields.Field`.

Matrices are 2-D field arrays (see :mod:`homjj.fields`).  The column ``j`` of
a matrix holds the coordinates of the image of the ``j``-th basis vector.
"""
from __future__ import annotations

import numpy as np

from .fields import Field, FieldMismatch


class ShapeError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    def __init__(self, rank: int, size: int):
        super().__init__(f"matrix is singular (rank {rank} < {size})")
        self.rank = rank
        self.size = size


def _check_domain(field: Field, *arrays: np.ndarray) -> None:
    for arr in arrays:
        if np.asarray(arr).dtype != np.dtype(field.dtype):
            raise FieldMismatch(f"array of dtype {np.asarray(arr).dtype} is not over {field.name}")


def mat_mul(a: np.ndarray, b: np.ndarray, field: Field) -> np.ndarray:
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    _check_domain(field, a, b)
    return field.reduce(a @ b)


def mat_pow(m: np.ndarray, k: int, field: Field) -> np.ndarray:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"matrix power needs a square matrix, got {m.shape}")
    out = field.eye(m.shape[0])
    for _ in range(k):
        out = field.reduce(out @ m)
    return out


def rref(m: np.ndarray, field: Field) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    r = field.array(m)
    rows, cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = [i for i in range(row, rows) if r[i, col] != 0]
        if not nz:
            continue
        i = nz[0]
        if i != row:
            r[[row, i]] = r[[i, row]]
        inv = field.inv(r[row, col])
        r[row] = field.reduce(np.array([field.reduce_scalar(v * inv) for v in r[row]], dtype=field.dtype))
        for i in range(rows):
            if i != row and r[i, col] != 0:
                f = r[i, col]
                r[i] = field.reduce(np.array(
                    [field.reduce_scalar(x - f * y) for x, y in zip(r[i], r[row])], dtype=field.dtype))
        pivots.append(col)
        row += 1
    return r, pivots


def rank(m: np.ndarray, field: Field) -> int:
    return len(rref(m, field)[1])


def mat_inverse(m: np.ndarray, field: Field) -> np.ndarray:
    """Exact inverse by fraction-free (Bareiss) elimination on ``[m | I]``.

    Raises :class:`SingularMatrixError` carrying the rank when ``m`` is singular.
    """
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"inverse needs a square matrix, got {m.shape}")
    _check_domain(field, m)
    n = m.shape[0]
    aug = np.concatenate([field.array(m), field.eye(n)], axis=1)
    prev = 1
    for k in range(n):
        if aug[k, k] == 0:
            swap = next((i for i in range(k + 1, n) if aug[i, k] != 0), None)
            if swap is None:
                raise SingularMatrixError(rank(m, field), n)
            aug[[k, swap]] = aug[[swap, k]]
        pivot = aug[k, k]
        for i in range(k + 1, n):
            lead = aug[i, k]
            aug[i, k + 1:] = [field.div(pivot * x - lead * y, prev)
                              for x, y in zip(aug[i, k + 1:], aug[k, k + 1:])]
            aug[i, k] = 0
        prev = pivot
    # back substitution on the upper-triangular system
    inv = field.zeros((n, n))
    for i in range(n - 1, -1, -1):
        row = aug[i, n:].copy()
        for j in range(i + 1, n):
            if aug[i, j] != 0:
                row = field.reduce(row - aug[i, j] * inv[j])
        inv[i] = [field.div(x, aug[i, i]) for x in row]
    return field.reduce(inv)


def is_invertible(m: np.ndarray, field: Field) -> bool:
    return m.shape[0] == m.shape[1] and rank(m, field) == m.shape[0]


def column_basis(m: np.ndarray, field: Field) -> list[int]:
    """Indices of pivot columns: a basis of the column space of ``m``."""
    return rref(m, field)[1]


def solve_in_span(basis: np.ndarray, vectors: np.ndarray, field: Field) -> np.ndarray | None:
    """Coordinates ``X`` with ``basis @ X == vectors``, or ``None`` if some column is outside the span.

    ``basis`` must have linearly independent columns.
    """
    k = basis.shape[1]
    reduced, pivots = rref(np.concatenate([basis, vectors], axis=1), field)
    if any(p >= k for p in pivots):
        return None
    return reduced[:k, k:]


def block_diag(a: np.ndarray, b: np.ndarray, field: Field) -> np.ndarray:
    out = field.zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]))
    out[:a.shape[0], :a.shape[1]] = a
    out[a.shape[0]:, a.shape[1]:] = b
    return out


def null_space(m: np.ndarray, field: Field) -> np.ndarray:
    """Matrix whose columns form a basis of the kernel of ``m`` (possibly with zero columns)."""
    reduced, pivots = rref(m, field)
    cols = m.shape[1]
    free = [j for j in range(cols) if j not in pivots]
    out = field.zeros((cols, len(free)))
    for k, j in enumerate(free):
        out[j, k] = 1
        for r, p in enumerate(pivots):
            out[p, k] = field.reduce_scalar(-reduced[r, j])
    return out
