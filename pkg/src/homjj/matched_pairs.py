"""Matched pairs of Hom-(pre-)Jacobi-Jordan algebras and their bicrossed sums."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import identities as ids
from .algebra import (HomAlgebra, PreconditionError, anticommutator, check_hom_jacobi_jordan,
                      check_left_hom_pre_jj)
from .linalg import ShapeError, mat_inverse
from .report import CheckReport, combine, residual_report, verdict_report
from .representations import jj_rep_report, prejj_rep_report, twisted_dual_action


@dataclass(frozen=True, eq=False)
class MatchedPairData:
    """Two algebras acting on each other.

    ``rho1[x]`` (n2 x n2) is the action of e_x in A1 on A2 and ``rho2[a]``
    (n1 x n1) the action of e_a in A2 on A1.  ``lam1``/``lam2`` are the right
    actions of a pre-JJ pair and stay ``None`` for a Jacobi-Jordan pair.
    """

    A1: HomAlgebra
    A2: HomAlgebra
    rho1: np.ndarray
    rho2: np.ndarray
    lam1: np.ndarray | None = None
    lam2: np.ndarray | None = None

    def __post_init__(self):
        if self.A1.field is not self.A2.field:
            raise ValueError("both algebras must share a scalar field")
        f = self.A1.field
        n1, n2 = self.A1.dim, self.A2.dim
        for name, shape in (("rho1", (n1, n2, n2)), ("rho2", (n2, n1, n1)),
                            ("lam1", (n1, n2, n2)), ("lam2", (n2, n1, n1))):
            value = getattr(self, name)
            if value is None:
                continue
            arr = f.array(value)
            if arr.shape != shape:
                raise ShapeError(f"{name} must have shape {shape}, got {arr.shape}")
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)
        if (self.lam1 is None) != (self.lam2 is None):
            raise ValueError("a pre-JJ pair needs both right actions")

    @property
    def kind(self) -> str:
        return "jj" if self.lam1 is None else "prejj"

    @property
    def field(self):
        return self.A1.field

    @classmethod
    def zero(cls, A1: HomAlgebra, A2: HomAlgebra, prejj: bool = False) -> "MatchedPairData":
        f = A1.field
        r1 = f.zeros((A1.dim, A2.dim, A2.dim))
        r2 = f.zeros((A2.dim, A1.dim, A1.dim))
        return cls(A1, A2, r1, r2, r1 if prejj else None, r2 if prejj else None)

    def __eq__(self, other):
        if not isinstance(other, MatchedPairData):
            return NotImplemented
        same = self.A1 == other.A1 and self.A2 == other.A2 and self.kind == other.kind
        pairs = [(self.rho1, other.rho1), (self.rho2, other.rho2)]
        if self.kind == "prejj" and same:
            pairs += [(self.lam1, other.lam1), (self.lam2, other.lam2)]
        return same and all(np.array_equal(a, b) for a, b in pairs)

    __hash__ = None


def check_matched_pair_jj(M: MatchedPairData) -> CheckReport:
    """Factors, both representations and the two mixed conditions, each reported separately.

    Witness indices are local to each condition: (x, a, b) for the first mixed
    condition and (a, x, y) for the second.
    """
    A1, A2, mod = M.A1, M.A2, M.A1.mod
    parts = [
        _renamed(check_hom_jacobi_jordan(A1), "A1-hom-jacobi-jordan"),
        _renamed(check_hom_jacobi_jordan(A2), "A2-hom-jacobi-jordan"),
        jj_rep_report(A1, M.rho1, A2.alpha, name="rho1-representation", prefix="rho1-"),
        jj_rep_report(A2, M.rho2, A1.alpha, name="rho2-representation", prefix="rho2-"),
        residual_report("mixed-1", ids.matched_pair_jj(A1.c, A1.alpha, A2.c, A2.alpha,
                                                       M.rho1, M.rho2, mod), 3),
        residual_report("mixed-2", ids.matched_pair_jj(A2.c, A2.alpha, A1.c, A1.alpha,
                                                       M.rho2, M.rho1, mod), 3),
    ]
    return combine("jj-matched-pair", parts)


def check_matched_pair_prejj(M: MatchedPairData) -> CheckReport:
    if M.kind != "prejj":
        raise ValueError("a pre-JJ matched pair needs right actions")
    A1, A2, mod = M.A1, M.A2, M.A1.mod
    first = (A1.c, A1.alpha, A2.c, A2.alpha, M.rho1, M.lam1, M.rho2, M.lam2)
    second = (A2.c, A2.alpha, A1.c, A1.alpha, M.rho2, M.lam2, M.rho1, M.lam1)
    parts = [
        _renamed(check_left_hom_pre_jj(A1), "A1-left-hom-pre-jj"),
        _renamed(check_left_hom_pre_jj(A2), "A2-left-hom-pre-jj"),
        prejj_rep_report(A1, M.rho1, M.lam1, A2.alpha, name="rho1-lambda1-representation", prefix="1-"),
        prejj_rep_report(A2, M.rho2, M.lam2, A1.alpha, name="rho2-lambda2-representation", prefix="2-"),
        residual_report("mixed-1", ids.matched_pair_prejj_left(*first, mod), 3),
        residual_report("mixed-2", ids.matched_pair_prejj_right(*first, mod), 3),
        residual_report("mixed-3", ids.matched_pair_prejj_left(*second, mod), 3),
        residual_report("mixed-4", ids.matched_pair_prejj_right(*second, mod), 3),
    ]
    return combine("prejj-matched-pair", parts)


def check_matched_pair(M: MatchedPairData) -> CheckReport:
    return check_matched_pair_jj(M) if M.kind == "jj" else check_matched_pair_prejj(M)


def _renamed(report: CheckReport, name: str) -> CheckReport:
    return CheckReport(name, report.passed, report.witnesses, report.checked, report.details)


def _bicross(M: MatchedPairData, right1, right2) -> HomAlgebra:
    A1, A2, f = M.A1, M.A2, M.field
    n1, n2 = A1.dim, A2.dim
    c = f.zeros((n1 + n2,) * 3)
    c[:n1, :n1, :n1] = A1.c
    c[n1:, n1:, n1:] = A2.c
    # e_x . e_b = right2(e_b) e_x + rho1(e_x) e_b
    c[:n1, n1:, :n1] = np.transpose(right2, (2, 0, 1))
    c[:n1, n1:, n1:] = np.transpose(M.rho1, (0, 2, 1))
    # e_a . e_y = rho2(e_a) e_y + right1(e_y) e_a
    c[n1:, :n1, :n1] = np.transpose(M.rho2, (0, 2, 1))
    c[n1:, :n1, n1:] = np.transpose(right1, (2, 0, 1))
    alpha = f.zeros((n1 + n2, n1 + n2))
    alpha[:n1, :n1] = A1.alpha
    alpha[n1:, n1:] = A2.alpha
    return HomAlgebra(f, c, alpha, A1.labels + tuple(f"{s}'" for s in A2.labels))


def bicross_sum_jj(M: MatchedPairData) -> HomAlgebra:
    """(x+a)(y+b) = (xy + rho2(a)y + rho2(b)x) + (ab + rho1(x)b + rho1(y)a), twist alpha1 + alpha2."""
    return _bicross(M, M.rho1, M.rho2)


def bicross_sum_prejj(M: MatchedPairData) -> HomAlgebra:
    """(x+a).(y+b) = (x.y + rho2(a)y + lam2(b)x) + (a.b + rho1(x)b + lam1(y)a)."""
    if M.kind != "prejj":
        raise ValueError("a pre-JJ bicrossed sum needs right actions")
    return _bicross(M, M.lam1, M.lam2)


def subadjacent_matched_pair(M: MatchedPairData) -> MatchedPairData:
    """(A1^C, A2^C, rho1 + lam1, rho2 + lam2) from a pre-JJ matched pair."""
    report = check_matched_pair_prejj(M)
    if not report:
        raise PreconditionError("not a matched pair of left Hom-pre-JJ algebras", report)
    f = M.field
    return MatchedPairData(anticommutator(M.A1), anticommutator(M.A2),
                           f.reduce(M.rho1 + M.lam1), f.reduce(M.rho2 + M.lam2))


def dual_matched_pair_equivalence(A: HomAlgebra, Astar: HomAlgebra) -> CheckReport:
    """Compare the JJ pair (A^C, A*^C, L~*, cal-L~*) with the pre-JJ pair built from the coadjoint actions.

    ``Astar`` is a Hom-algebra on the dual coordinate space whose twist must
    be (alpha^-1)^T.  PASS means the two matched-pair verdicts agree.
    """
    f = A.field
    alpha_inv = mat_inverse(A.alpha, f)
    if Astar.dim != A.dim or not np.array_equal(Astar.alpha, np.ascontiguousarray(alpha_inv.T)):
        raise PreconditionError("the dual algebra must carry the twist (alpha^-1)^T")
    L = twisted_dual_action(A, A.left_multiplications(), A.alpha)
    R = twisted_dual_action(A, A.right_multiplications(), A.alpha)
    cL = twisted_dual_action(Astar, Astar.left_multiplications(), Astar.alpha)
    cR = twisted_dual_action(Astar, Astar.right_multiplications(), Astar.alpha)
    jj = check_matched_pair_jj(MatchedPairData(anticommutator(A), anticommutator(Astar), L, cL))
    pre = check_matched_pair_prejj(MatchedPairData(A, Astar, rho1=f.reduce(L + R), lam1=f.reduce(-R),
                                                   rho2=f.reduce(cL + cR), lam2=f.reduce(-cR)))
    return verdict_report("dual-matched-pair-equivalence", jj.passed == pre.passed,
                          "the two matched-pair verdicts differ",
                          {"jj-matched-pair": jj.verdict, "prejj-matched-pair": pre.verdict})
