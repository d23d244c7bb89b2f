"""Representations of Hom-Jacobi-Jordan and left Hom-pre-Jacobi-Jordan algebras.

An action is stored as a stack ``rho[i] = rho(e_i)`` of m x m matrices acting
on column vectors of the module.  Dual modules are coordinate spaces of the
same dimension, with adjoints realized as transposes.
"""
from __future__ import annotations

import numpy as np

from . import identities as ids
from .algebra import (HomAlgebra, PreconditionError, anticommutator, check_hom_jacobi_jordan,
                      check_left_hom_pre_jj, check_morphism)
from .linalg import ShapeError, mat_inverse, mat_pow
from .report import CheckReport, combine, residual_report, verdict_report


def _readonly(arr):
    arr.flags.writeable = False
    return arr


class Representation:
    """A module (V, rho, phi) over a Hom-algebra."""

    def __init__(self, base: HomAlgebra, rho, phi=None):
        self.base = base
        field = base.field
        rho = field.array(rho)
        if rho.ndim != 3 or rho.shape[0] != base.dim or rho.shape[1] != rho.shape[2]:
            raise ShapeError(f"expected {base.dim} square action matrices, got shape {rho.shape}")
        m = rho.shape[1]
        self.rho = _readonly(rho)
        self.phi = _readonly(field.eye(m) if phi is None else field.array(phi, (m, m)))

    @property
    def field(self):
        return self.base.field

    @property
    def mdim(self) -> int:
        return self.rho.shape[1]

    def act(self, x, v) -> np.ndarray:
        """rho(x) v for coordinate vectors x in A and v in V."""
        f = self.field
        x, v = self.base.vector(x), f.array(v, (self.mdim,))
        return f.reduce(np.einsum("i,ist,t->s", x, self.rho, v))

    def with_base(self, base: HomAlgebra) -> "Representation":
        return Representation(base, self.rho, self.phi)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self.base == other.base and np.array_equal(self.rho, other.rho)
                and np.array_equal(self.phi, other.phi))

    __hash__ = None

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.base.dim}, mdim={self.mdim})"


class PreJJRepresentation(Representation):
    """A module (V, rho, lambda, phi) over a left Hom-pre-JJ algebra."""

    def __init__(self, base: HomAlgebra, rho, lam, phi=None):
        super().__init__(base, rho, phi)
        lam = self.field.array(lam, self.rho.shape)
        self.lam = _readonly(lam)

    def act_right(self, x, v) -> np.ndarray:
        f = self.field
        x, v = self.base.vector(x), f.array(v, (self.mdim,))
        return f.reduce(np.einsum("i,ist,t->s", x, self.lam, v))

    def with_base(self, base: HomAlgebra) -> "PreJJRepresentation":
        return PreJJRepresentation(base, self.rho, self.lam, self.phi)

    def __eq__(self, other):
        return super().__eq__(other) is True and np.array_equal(self.lam, other.lam)


def _combination(coeffs: np.ndarray, mats: np.ndarray, field) -> np.ndarray:
    """Stack of sum_k coeffs[k, i] mats[k]: the action at the vectors given by the columns."""
    return field.reduce(np.einsum("ki,kst->ist", coeffs, mats))


def _left_mult(A: HomAlgebra) -> np.ndarray:
    return A.left_multiplications()


def _right_mult(A: HomAlgebra) -> np.ndarray:
    return A.right_multiplications()


# -- checks ----------------------------------------------------------------------

def jj_rep_report(A: HomAlgebra, rho, phi, name: str = "jj-representation",
                  prefix: str = "") -> CheckReport:
    """Twist compatibility and the twisted action identity, without a precondition on A."""
    mod = A.mod
    twist = residual_report(prefix + "twist-compatible", ids.action_twist(rho, A.alpha, phi, mod), 1)
    action = residual_report(prefix + "action-identity", ids.jj_action(A.c, A.alpha, rho, phi, mod), 2)
    return combine(name, [twist, action])


def prejj_rep_report(A: HomAlgebra, rho, lam, phi, name: str = "prejj-representation",
                     prefix: str = "") -> CheckReport:
    mod = A.mod
    sub = anticommutator(A)
    parts = [
        residual_report(prefix + "rho-twist-compatible", ids.action_twist(rho, A.alpha, phi, mod), 1),
        residual_report(prefix + "rho-subadjacent-action", ids.jj_action(sub.c, A.alpha, rho, phi, mod), 2),
        residual_report(prefix + "lambda-twist-compatible", ids.action_twist(lam, A.alpha, phi, mod), 1),
        residual_report(prefix + "lambda-identity",
                        ids.prejj_right_action(A.c, A.alpha, rho, lam, phi, mod), 2),
    ]
    return combine(name, parts)


def check_jj_rep(R: Representation) -> CheckReport:
    base = check_hom_jacobi_jordan(R.base)
    if not base:
        raise PreconditionError("base algebra is not Hom-Jacobi-Jordan", base)
    return jj_rep_report(R.base, R.rho, R.phi)


def check_prejj_rep(R: PreJJRepresentation) -> CheckReport:
    base = check_left_hom_pre_jj(R.base)
    if not base:
        raise PreconditionError("base algebra is not left Hom-pre-Jacobi-Jordan", base)
    return prejj_rep_report(R.base, R.rho, R.lam, R.phi)


# -- constructions ---------------------------------------------------------------

def zero_rep(A: HomAlgebra, m: int, phi=None) -> Representation:
    return Representation(A, A.field.zeros((A.dim, m, m)), phi)


def zero_prejj_rep(A: HomAlgebra, m: int, phi=None) -> PreJJRepresentation:
    z = A.field.zeros((A.dim, m, m))
    return PreJJRepresentation(A, z, z, phi)


def regular_rep(A: HomAlgebra) -> Representation:
    """Left multiplications on A itself, with twist alpha."""
    report = check_hom_jacobi_jordan(A)
    if not report:
        raise PreconditionError("regular representation needs a Hom-Jacobi-Jordan algebra", report)
    return Representation(A, _left_mult(A), A.alpha)


def regular_prejj_rep(A: HomAlgebra) -> PreJJRepresentation:
    """(L, R, alpha) on a left Hom-pre-JJ algebra."""
    report = check_left_hom_pre_jj(A)
    if not report:
        raise PreconditionError("regular representation needs a left Hom-pre-JJ algebra", report)
    return PreJJRepresentation(A, _left_mult(A), _right_mult(A), A.alpha)


def restrict_rep(R: Representation, coords) -> Representation:
    """Restrict R to the coordinate subspace spanned by the given 1-based basis vectors.

    The subspace must be stable under every rho(e_i) and under phi (for the
    regular representation this is a two-sided Hom-ideal).
    """
    keep = [k - 1 for k in coords]
    drop = [k for k in range(R.mdim) if k not in keep]
    mats = [R.phi] + list(R.rho) + (list(R.lam) if isinstance(R, PreJJRepresentation) else [])
    for mat in mats:
        if np.any(mat[np.ix_(drop, keep)] != 0):
            raise PreconditionError("coordinate subspace is not invariant")
    sl = np.ix_(range(R.base.dim), keep, keep)
    phi = R.phi[np.ix_(keep, keep)]
    if isinstance(R, PreJJRepresentation):
        return PreJJRepresentation(R.base, R.rho[sl], R.lam[sl], phi)
    return Representation(R.base, R.rho[sl], phi)


def pullback_rep(f, A1: HomAlgebra, A2: HomAlgebra) -> Representation:
    """Representation of A1 on A2 through a morphism f: rho(x)b = f(x) * b, twist alpha2."""
    f = A1.field.array(f)
    report = check_morphism(A1, A2, f)
    if not report:
        raise PreconditionError("f is not a morphism", report)
    return Representation(A1, _combination(f, _left_mult(A2), A1.field), A2.alpha)


def pullback_prejj_rep(f, A1: HomAlgebra, A2: HomAlgebra) -> PreJJRepresentation:
    """rho(a)b = f(a).b and lambda(a)b = b.f(a) on A2."""
    f = A1.field.array(f)
    report = check_morphism(A1, A2, f)
    if not report:
        raise PreconditionError("f is not a morphism", report)
    field = A1.field
    return PreJJRepresentation(A1, _combination(f, _left_mult(A2), field),
                               _combination(f, _right_mult(A2), field), A2.alpha)


def twist_rep(R: Representation, beta, n: int = 1) -> Representation:
    """Precompose the action with beta^n, keeping phi."""
    A = R.base
    beta = A.field.array(beta, (A.dim, A.dim))
    report = check_morphism(A, A, beta)
    if not report:
        raise PreconditionError("beta is not a self-morphism of the base", report)
    if n == 0:
        return R
    bn = mat_pow(beta, n, A.field)
    rho = _combination(bn, R.rho, A.field)
    if isinstance(R, PreJJRepresentation):
        return PreJJRepresentation(A, rho, _combination(bn, R.lam, A.field), R.phi)
    return Representation(A, rho, R.phi)


def _semidirect(A: HomAlgebra, left, right, phi, m) -> HomAlgebra:
    n = A.dim
    f = A.field
    c = f.zeros((n + m,) * 3)
    c[:n, :n, :n] = A.c
    # e_x . f_v = left(e_x) f_v ; f_u . e_y = right(e_y) f_u
    c[:n, n:, n:] = np.transpose(left, (0, 2, 1))
    c[n:, :n, n:] = np.transpose(right, (2, 0, 1))
    alpha = f.zeros((n + m, n + m))
    alpha[:n, :n] = A.alpha
    alpha[n:, n:] = phi
    labels = A.labels + tuple(f"v{k + 1}" for k in range(m))
    return HomAlgebra(f, c, alpha, labels)


def semidirect_jj(R: Representation) -> HomAlgebra:
    """A + V with (x+u)(y+v) = xy + rho(x)v + rho(y)u and twist alpha + phi."""
    return _semidirect(R.base, R.rho, R.rho, R.phi, R.mdim)


def semidirect_prejj(R: PreJJRepresentation) -> HomAlgebra:
    """A + V with (x+u).(y+v) = x.y + rho(x)v + lambda(y)u."""
    return _semidirect(R.base, R.rho, R.lam, R.phi, R.mdim)


def sum_rep(R: PreJJRepresentation) -> Representation:
    """(rho + lambda, phi) as a representation of the sub-adjacent algebra."""
    f = R.field
    return Representation(anticommutator(R.base), f.reduce(R.rho + R.lam), R.phi)


def _invert_twists(A: HomAlgebra, phi) -> np.ndarray:
    """phi^-1, after making sure alpha is invertible too (SingularMatrixError otherwise)."""
    mat_inverse(A.alpha, A.field)
    return mat_inverse(phi, A.field)


def twisted_dual_action(A: HomAlgebra, rho, phi) -> np.ndarray:
    """x -> (phi^-2 rho(alpha x))^T, the twisted adjoint of an action."""
    f = A.field
    phi_inv = _invert_twists(A, phi)
    p2 = f.reduce(phi_inv @ phi_inv)
    shifted = ids.twisted_action(rho, A.alpha, A.mod)
    return f.reduce(np.transpose(np.einsum("su,iut->ist", p2, shifted), (0, 2, 1)))


def dual_twist(A: HomAlgebra, phi) -> np.ndarray:
    return np.ascontiguousarray(_invert_twists(A, phi).T)


def dual_rep_jj(R: Representation) -> Representation:
    """The dual module V* with the twisted adjoint action and twist (phi^-1)^T.

    Needs alpha and phi invertible.
    """
    return Representation(R.base, twisted_dual_action(R.base, R.rho, R.phi), dual_twist(R.base, R.phi))


def coadjoint_rep(A: HomAlgebra) -> Representation:
    return dual_rep_jj(regular_rep(A))


def coadjoint_double(A: HomAlgebra) -> HomAlgebra:
    """A + A* through the coadjoint representation; twist alpha + (alpha^-1)^T."""
    return semidirect_jj(coadjoint_rep(A))


def dual_rep_prejj(R: PreJJRepresentation) -> PreJJRepresentation:
    """(rho~ + lambda~, -lambda~, (phi^-1)^T) on the dual module."""
    f = R.field
    rt = twisted_dual_action(R.base, R.rho, R.phi)
    lt = twisted_dual_action(R.base, R.lam, R.phi)
    return PreJJRepresentation(R.base, f.reduce(rt + lt), f.reduce(-lt), dual_twist(R.base, R.phi))


def prejj_coadjoint_rep(A: HomAlgebra) -> PreJJRepresentation:
    return dual_rep_prejj(regular_prejj_rep(A))


def prejj_coadjoint_double(A: HomAlgebra) -> HomAlgebra:
    return semidirect_prejj(prejj_coadjoint_rep(A))


def check_dual_involution(R: PreJJRepresentation) -> CheckReport:
    """Dualizing twice returns R entrywise."""
    back = dual_rep_prejj(dual_rep_prejj(R))
    parts = []
    for name, old, new in (("rho", R.rho, back.rho), ("lambda", R.lam, back.lam), ("phi", R.phi, back.phi)):
        parts.append(residual_report(f"{name}-restored", R.field.reduce(new - old), 1))
    return combine("dual-involution", parts)


LAMBDA_SYMMETRY_LABEL = "lambda-symmetry (mu read as lambda)"


def triple_equivalence_report(R: PreJJRepresentation) -> CheckReport:
    """Evaluate three conditions on R and PASS when they agree.

    (i) (rho + lambda, -lambda, phi) is a pre-JJ representation;
    (ii) (rho~, lambda~, (phi^-1)^T) is a pre-JJ representation on the dual;
    (iii) lambda(alpha e_i) lambda(e_j) is symmetric in (i, j).

    The equivalence is claimed for representations only, so R itself must
    pass check_prejj_rep.
    """
    base_report = check_prejj_rep(R)
    if not base_report:
        raise PreconditionError("not a pre-JJ representation", base_report)
    A, f = R.base, R.field
    first = prejj_rep_report(A, f.reduce(R.rho + R.lam), f.reduce(-R.lam), R.phi)
    rt = twisted_dual_action(A, R.rho, R.phi)
    lt = twisted_dual_action(A, R.lam, R.phi)
    second = prejj_rep_report(A, rt, lt, dual_twist(A, R.phi))
    prod = f.reduce(np.einsum("isu,jut->ijst", ids.twisted_action(R.lam, A.alpha, A.mod), R.lam))
    third = residual_report("lambda-symmetry", f.reduce(prod - np.swapaxes(prod, 0, 1)), 2)
    verdicts = (first.passed, second.passed, third.passed)
    details = {
        "(i) rho+lambda, -lambda": first.verdict,
        "(ii) twisted duals": second.verdict,
        f"(iii) {LAMBDA_SYMMETRY_LABEL}": third.verdict,
    }
    agree = len(set(verdicts)) == 1
    return verdict_report("triple-equivalence", agree, "conditions (i)-(iii) disagree", details)

