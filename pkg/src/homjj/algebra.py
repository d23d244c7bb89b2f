"""Hom-algebras given by structure constants, their checkers and constructions."""
from __future__ import annotations

from typing import Mapping, Sequence

import numpy as np

from . import identities as ids
from .fields import Field, get_field
from .linalg import ShapeError, mat_inverse, mat_pow
from .report import CheckReport, combine, residual_report


class PreconditionError(ValueError):
    """A construction or checker was called on data violating its hypothesis."""

    def __init__(self, message: str, report: CheckReport | None = None):
        super().__init__(message)
        self.report = report


class UnsupportedCharacteristic(ValueError):
    pass


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


class HomAlgebra:
    """A finite-dimensional Hom-algebra ``(A, mu, alpha)``.

    ``c[i, j, k]`` is the coefficient of e_k in e_i e_j and column ``j`` of
    ``alpha`` holds the coordinates of alpha(e_j).  Indices are 0-based in
    arrays; tables passed to :meth:`from_table` and all witnesses use the
    1-based e1..en numbering.  Nothing (commutativity, multiplicativity, ...)
    is assumed at construction; every property is a checker verdict.
    """

    def __init__(self, field: Field | str, c, alpha=None, labels: Sequence[str] | None = None):
        self.field = get_field(field)
        c = self.field.array(c)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
            raise ShapeError(f"structure tensor must be n x n x n, got {c.shape}")
        n = c.shape[0]
        if n < 1:
            raise ShapeError("dimension must be at least 1")
        self.c = _readonly(c)
        self.alpha = _readonly(self.field.eye(n) if alpha is None else self.field.array(alpha, (n, n)))
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(n))
        if len(self.labels) != n:
            raise ShapeError(f"expected {n} basis labels, got {len(self.labels)}")

    @classmethod
    def from_table(cls, field, dim: int, products: Mapping[tuple[int, int], Mapping[int, object]],
                   alpha=None, labels=None) -> "HomAlgebra":
        """Build from ``{(i, j): {k: coeff}}`` with 1-based indices; absent products are zero."""
        field = get_field(field)
        c = field.zeros((dim, dim, dim))
        for (i, j), terms in products.items():
            for k, coeff in terms.items():
                if not (1 <= i <= dim and 1 <= j <= dim and 1 <= k <= dim):
                    raise IndexError(f"basis index out of range in product ({i},{j}) -> {k}")
                c[i - 1, j - 1, k - 1] = field.coerce(coeff)
        return cls(field, c, alpha, labels)

    @classmethod
    def abelian(cls, field, dim: int, alpha=None) -> "HomAlgebra":
        field = get_field(field)
        return cls(field, field.zeros((dim, dim, dim)), alpha)

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    @property
    def mod(self):
        return self.field.modulus

    def vector(self, coords) -> np.ndarray:
        return self.field.array(coords, (self.dim,))

    def basis(self, i: int) -> np.ndarray:
        """The 1-based basis vector e_i."""
        v = self.field.zeros(self.dim)
        v[i - 1] = 1
        return v

    def product(self, x, y) -> np.ndarray:
        x, y = self.vector(x), self.vector(y)
        return self.field.reduce(np.einsum("i,j,ijk->k", x, y, self.c))

    def twist(self, x) -> np.ndarray:
        return self.field.reduce(self.alpha @ self.vector(x))

    def left_multiplications(self) -> np.ndarray:
        """L[i] = matrix of y -> e_i y."""
        return np.ascontiguousarray(np.transpose(self.c, (0, 2, 1)))

    def right_multiplications(self) -> np.ndarray:
        """R[i] = matrix of y -> y e_i."""
        return np.ascontiguousarray(np.transpose(self.c, (1, 2, 0)))

    def replace(self, c=None, alpha=None) -> "HomAlgebra":
        return HomAlgebra(self.field, self.c if c is None else c,
                          self.alpha if alpha is None else alpha, self.labels)

    def __eq__(self, other):
        if not isinstance(other, HomAlgebra):
            return NotImplemented
        return (self.field is other.field and self.c.shape == other.c.shape
                and np.array_equal(self.c, other.c) and np.array_equal(self.alpha, other.alpha)
                and self.labels == other.labels)

    __hash__ = None

    def __repr__(self):
        return f"HomAlgebra({self.field.name}, dim={self.dim})"


# -- checkers -------------------------------------------------------------------

def check_commutative(A: HomAlgebra) -> CheckReport:
    return residual_report("commutative", ids.commutator(A.c, A.mod), 2)


def check_multiplicative(A: HomAlgebra) -> CheckReport:
    return residual_report("multiplicative", ids.multiplicativity(A.c, A.alpha, A.mod), 2)


def hom_jacobian(A: HomAlgebra, x, y, z) -> np.ndarray:
    """The Hom-Jacobian: cyclic sum of (x y) alpha(z)."""
    def term(u, v, w):
        return A.product(A.product(u, v), A.twist(w))
    return A.field.reduce(term(x, y, z) + term(y, z, x) + term(z, x, y))


def anti_hom_associator(A: HomAlgebra, x, y, z) -> np.ndarray:
    """(x y) alpha(z) + alpha(x) (y z)."""
    return A.field.reduce(A.product(A.product(x, y), A.twist(z))
                          + A.product(A.twist(x), A.product(y, z)))


def hom_associator(A: HomAlgebra, x, y, z) -> np.ndarray:
    return A.field.reduce(A.product(A.product(x, y), A.twist(z))
                          - A.product(A.twist(x), A.product(y, z)))


def check_hom_jacobi_jordan(A: HomAlgebra) -> CheckReport:
    jac = residual_report("hom-jacobi", ids.hom_jacobian(A.c, A.alpha, A.mod), 3)
    return combine("hom-jacobi-jordan", [check_commutative(A), check_multiplicative(A), jac])


def check_hom_associative(A: HomAlgebra) -> CheckReport:
    assoc = residual_report("hom-associator", ids.hom_associator(A.c, A.alpha, A.mod), 3)
    return combine("hom-associative", [check_multiplicative(A), assoc])


def check_anti_hom_associative(A: HomAlgebra) -> CheckReport:
    anti = residual_report("anti-hom-associator", ids.anti_hom_associator(A.c, A.alpha, A.mod), 3)
    return combine("anti-hom-associative", [check_multiplicative(A), anti])


def check_left_hom_pre_jj(A: HomAlgebra) -> CheckReport:
    skew = residual_report("left-skew", ids.left_skew(A.c, A.alpha, A.mod), 3)
    return combine("left-hom-pre-jj", [check_multiplicative(A), skew])


def check_right_hom_pre_jj(A: HomAlgebra) -> CheckReport:
    t = ids.anti_hom_associator(A.c, A.alpha, A.mod)
    skew = residual_report("right-skew", A.field.reduce(t + np.swapaxes(t, 1, 2)), 3)
    return combine("right-hom-pre-jj", [check_multiplicative(A), skew])


def _require_polarizable(field: Field) -> None:
    if field.characteristic in (2, 3):
        raise UnsupportedCharacteristic(
            f"the polarized Hom-Jordan check needs characteristic 0 or >= 5, not {field.name}")


def check_hom_jordan(A: HomAlgebra) -> CheckReport:
    """Commutative, multiplicative and as(x*x, alpha y, alpha x) = 0.

    The cubic identity is checked through its full polarization in the three
    x-slots, which is equivalent when 6 is invertible.
    """
    _require_polarizable(A.field)
    jordan = residual_report("hom-jordan-identity", ids.hom_jordan_polarized(A.c, A.alpha, A.mod), 4)
    return combine("hom-jordan", [check_commutative(A), check_multiplicative(A), jordan])


def jj_admissibility_obstruction(A: HomAlgebra) -> CheckReport:
    """2 * cyclic sum of (x y + y x) alpha(z), for a Hom-associative algebra.

    Vanishes exactly when the anticommutator algebra is Hom-Jacobi-Jordan.
    """
    pre = check_hom_associative(A)
    if not pre:
        raise PreconditionError("algebra is not Hom-associative", pre)
    d = ids.outer_twisted(A.c, A.alpha, A.mod)
    s = d + np.swapaxes(d, 0, 1)
    cyc = s + np.moveaxis(s, -2, -4) + np.moveaxis(s, -4, -2)
    return residual_report("jj-admissibility", A.field.reduce(2 * cyc), 3)


def check_morphism(A: HomAlgebra, B: HomAlgebra, f) -> CheckReport:
    """f: A -> B commutes with the products and the twists."""
    f = A.field.array(f)
    if f.shape != (B.dim, A.dim):
        raise ShapeError(f"morphism must be {B.dim} x {A.dim}, got {f.shape}")
    if A.field is not B.field:
        raise ValueError("algebras over different fields")
    prod = residual_report("preserves-product", ids.morphism_product(A.c, B.c, f, A.mod), 2)
    twist = residual_report("commutes-with-twist", ids.morphism_twist(A.alpha, B.alpha, f, A.mod), 1)
    return combine("morphism", [prod, twist])


def nijenhuis_check(A: HomAlgebra, N) -> CheckReport:
    N = A.field.array(N, (A.dim, A.dim))
    comm = residual_report("commutes-with-twist", ids.linear_commutator(N, A.alpha, A.mod), 1)
    torsion = residual_report("nijenhuis-torsion", ids.nijenhuis_torsion(A.c, N, A.mod), 2)
    return combine("nijenhuis", [comm, torsion])


def check_rota_baxter(A: HomAlgebra, P, weight=0) -> CheckReport:
    """Rota-Baxter identity of the given weight on basis pairs.

    The verdict covers the identity only; ``details['commutes_with_alpha']``
    records whether P alpha = alpha P, which constructions additionally need.
    """
    P = A.field.array(P, (A.dim, A.dim))
    w = A.field.coerce(weight)
    commutes = A.field.is_zero(ids.linear_commutator(P, A.alpha, A.mod))
    return residual_report("rota-baxter", ids.rota_baxter(A.c, P, w, A.mod), 2,
                           details={"weight": A.field.format(w), "commutes_with_alpha": commutes})


# -- constructions --------------------------------------------------------------

def anticommutator(A: HomAlgebra) -> HomAlgebra:
    """x * y = x.y + y.x with the same twist."""
    return A.replace(c=A.field.reduce(A.c + np.swapaxes(A.c, 0, 1)))


def opposite(A: HomAlgebra) -> HomAlgebra:
    return A.replace(c=np.ascontiguousarray(np.swapaxes(A.c, 0, 1)))


def yau_twist(A: HomAlgebra, beta, n: int = 1) -> HomAlgebra:
    """(A, beta^n o mu, beta^n o alpha) for a self-morphism beta."""
    beta = A.field.array(beta, (A.dim, A.dim))
    report = check_morphism(A, A, beta)
    if not report:
        raise PreconditionError("beta is not a self-morphism of the algebra", report)
    if n == 0:
        return A
    bn = mat_pow(beta, n, A.field)
    c = A.field.reduce(np.einsum("rk,ijk->ijr", bn, A.c))
    return A.replace(c=c, alpha=A.field.reduce(bn @ A.alpha))


def nijenhuis_deform(A: HomAlgebra, N) -> HomAlgebra:
    """Deformed product x *_N y = N(x) y + x N(y) - N(x y), same twist."""
    N = A.field.array(N, (A.dim, A.dim))
    report = nijenhuis_check(A, N)
    if not report:
        raise PreconditionError("not a Nijenhuis operator", report)
    return A.replace(c=ids.nijenhuis_product(A.c, N, A.mod))


def transport(A: HomAlgebra, g) -> HomAlgebra:
    """The isomorphic copy of A under the invertible change of coordinates g.

    g is then an isomorphism from A onto the result.
    """
    g = A.field.array(g, (A.dim, A.dim))
    gi = mat_inverse(g, A.field)
    # c'(e_i, e_j) = g(g^-1 e_i * g^-1 e_j); g^-1 e_i is column i of gi
    c = np.einsum("ai,bj,abk,rk->ijr", gi, gi, A.c, g)
    return A.replace(c=A.field.reduce(c), alpha=A.field.reduce(g @ A.alpha @ gi))


def direct_sum(A: HomAlgebra, B: HomAlgebra) -> HomAlgebra:
    n, m = A.dim, B.dim
    c = A.field.zeros((n + m,) * 3)
    c[:n, :n, :n] = A.c
    c[n:, n:, n:] = B.c
    alpha = A.field.zeros((n + m, n + m))
    alpha[:n, :n] = A.alpha
    alpha[n:, n:] = B.alpha
    return HomAlgebra(A.field, c, alpha, A.labels + B.labels)
