"""Seeded random instances over Q that satisfy (or deliberately break) the axioms.

Valid instances come from a few constructive families:

* 2-step nilpotent algebras: basis split into X and Z, all products land in
  Z and Z annihilates everything, with twist t on X and t^2 on Z.  Every
  such table is Hom-JJ (when symmetric) or left Hom-pre-JJ (any table);
* isomorphic copies through a random change of basis;
* representations built from regular/zero modules, direct sums, duals and
  conjugation by a random invertible matrix;
* matched pairs read off a 2-step nilpotent algebra whose coordinate blocks
  are both subalgebras.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .algebra import HomAlgebra, anticommutator, transport
from .fields import QQ
from .linalg import is_invertible, mat_inverse
from .matched_pairs import MatchedPairData
from .representations import (PreJJRepresentation, Representation, check_jj_rep, check_prejj_rep,
                              dual_rep_jj, dual_rep_prejj, regular_prejj_rep, regular_rep)

SMALL = (-2, -1, 1, 2)
TWISTS = (1, 2, -1, Fraction(1, 2), 3)


def _ints(rng, shape, low=-2, high=2):
    return QQ.array(rng.integers(low, high + 1, size=shape).tolist())


def random_invertible(rng, n: int) -> np.ndarray:
    while True:
        g = _ints(rng, (n, n))
        if is_invertible(g, QQ):
            return g


def _nilpotent_table(rng, n: int, z: int, symmetric: bool, allowed=None) -> np.ndarray:
    """Products of the first n - z basis vectors land in the last z; everything else is zero."""
    x = n - z
    c = QQ.zeros((n, n, n))
    for i in range(x):
        for j in range(x):
            if symmetric and j < i:
                c[i, j] = c[j, i]
                continue
            for k in range(x, n):
                if allowed is None or allowed(i, j, k):
                    c[i, j, k] = int(rng.integers(-2, 3))
    return c


def _scalar_twist(n: int, z: int, t) -> np.ndarray:
    a = QQ.eye(n)
    for i in range(n):
        a[i, i] = QQ.coerce(t) if i < n - z else QQ.coerce(Fraction(t) ** 2)
    return a


def random_jj_algebra(rng, dim: int | None = None, basis_change: bool = True) -> HomAlgebra:
    """A random Hom-JJ algebra over Q (dim 1 to 3 by default)."""
    n = dim or int(rng.integers(1, 4))
    z = int(rng.integers(1, n)) if n > 1 else 1
    t = TWISTS[int(rng.integers(len(TWISTS)))]
    A = HomAlgebra(QQ, _nilpotent_table(rng, n, z, True), _scalar_twist(n, z, t))
    return transport(A, random_invertible(rng, n)) if basis_change else A


def random_prejj_algebra(rng, dim: int | None = None, basis_change: bool = True) -> HomAlgebra:
    """A random left Hom-pre-JJ algebra over Q."""
    n = dim or int(rng.integers(1, 4))
    z = int(rng.integers(1, n)) if n > 1 else 1
    t = TWISTS[int(rng.integers(len(TWISTS)))]
    A = HomAlgebra(QQ, _nilpotent_table(rng, n, z, False), _scalar_twist(n, z, t))
    return transport(A, random_invertible(rng, n)) if basis_change else A


def _block_diag_stack(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    n, m1, m2 = first.shape[0], first.shape[1], second.shape[1]
    out = QQ.zeros((n, m1 + m2, m1 + m2))
    out[:, :m1, :m1] = first
    out[:, m1:, m1:] = second
    return out


def _conjugate(rng, rho: np.ndarray, phi: np.ndarray):
    m = phi.shape[0]
    s = random_invertible(rng, m)
    s_inv = mat_inverse(s, QQ)
    return np.einsum("su,iut,tv->isv", s, rho, s_inv), s @ phi @ s_inv


def _invertible_phi(rng, m: int) -> np.ndarray:
    return random_invertible(rng, m)


def random_jj_rep(rng, A: HomAlgebra | None = None, max_mdim: int = 3,
                  invertible_phi: bool = True) -> Representation:
    """A valid representation of a random (or given) Hom-JJ algebra.

    Built from the regular, coadjoint and zero modules, an optional direct
    sum, and a final conjugation.
    """
    A = A if A is not None else random_jj_algebra(rng)
    pieces = []
    budget = max_mdim
    while budget > 0:
        kind = int(rng.integers(3))
        if kind == 0 and A.dim <= budget:
            R = regular_rep(A)
        elif kind == 1 and A.dim <= budget and is_invertible(A.alpha, QQ):
            R = dual_rep_jj(regular_rep(A))
        else:
            m = int(rng.integers(1, budget + 1))
            R = Representation(A, QQ.zeros((A.dim, m, m)), _invertible_phi(rng, m))
        if invertible_phi and not is_invertible(R.phi, QQ):
            continue
        pieces.append(R)
        budget -= R.mdim
        if rng.random() < 0.5:
            break
    rho, phi = pieces[0].rho, pieces[0].phi
    for R in pieces[1:]:
        rho = _block_diag_stack(rho, R.rho)
        phi = _block_diag(phi, R.phi)
    rho, phi = _conjugate(rng, rho, phi)
    return Representation(A, rho, phi)


def random_prejj_rep(rng, A: HomAlgebra | None = None, max_mdim: int = 3,
                     invertible_phi: bool = True) -> PreJJRepresentation:
    A = A if A is not None else random_prejj_algebra(rng)
    pieces = []
    budget = max_mdim
    while budget > 0:
        kind = int(rng.integers(3))
        if kind == 0 and A.dim <= budget:
            R = regular_prejj_rep(A)
        elif kind == 1 and A.dim <= budget and is_invertible(A.alpha, QQ):
            R = dual_rep_prejj(regular_prejj_rep(A))
        else:
            m = int(rng.integers(1, budget + 1))
            zero = QQ.zeros((A.dim, m, m))
            R = PreJJRepresentation(A, zero, zero, _invertible_phi(rng, m))
        if invertible_phi and not is_invertible(R.phi, QQ):
            continue
        pieces.append(R)
        budget -= R.mdim
        if rng.random() < 0.5:
            break
    rho, lam, phi = pieces[0].rho, pieces[0].lam, pieces[0].phi
    for R in pieces[1:]:
        rho = _block_diag_stack(rho, R.rho)
        lam = _block_diag_stack(lam, R.lam)
        phi = _block_diag(phi, R.phi)
    s = random_invertible(rng, phi.shape[0])
    s_inv = mat_inverse(s, QQ)
    conj = lambda stack: np.einsum("su,iut,tv->isv", s, stack, s_inv)  # noqa: E731
    return PreJJRepresentation(A, conj(rho), conj(lam), s @ phi @ s_inv)


def _block_diag(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = QQ.zeros((a.shape[0] + b.shape[0],) * 2)
    out[:a.shape[0], :a.shape[0]] = a
    out[a.shape[0]:, a.shape[0]:] = b
    return out


def flip_one_sign(rng, R: Representation, max_tries: int = 200):
    """Negate one nonzero entry of an action (or of phi) so the axioms break.

    Resamples until the relevant checker FAILs; returns None if no single
    flip breaks R (e.g. when every action matrix is zero).
    """
    prejj = isinstance(R, PreJJRepresentation)
    check = check_prejj_rep if prejj else check_jj_rep
    arrays = {"rho": R.rho, "phi": R.phi}
    if prejj:
        arrays["lam"] = R.lam
    spots = [(name, idx) for name, arr in arrays.items() for idx in zip(*np.nonzero(arr != 0))]
    if not spots:
        return None
    order = rng.permutation(len(spots))[:max_tries]
    for k in order:
        name, idx = spots[k]
        new = {key: arr.copy() for key, arr in arrays.items()}
        new[name][idx] = -new[name][idx]
        if prejj:
            bad = PreJJRepresentation(R.base, new["rho"], new["lam"], new["phi"])
        else:
            bad = Representation(R.base, new["rho"], new["phi"])
        if not check(bad):
            return bad
    return None


# -- O-operators ------------------------------------------------------------------------

def random_valid_oop(rng):
    """A representation and an O-operator for it, from a few known-good recipes.

    Returns ``(R, T, recipe)``.
    """
    recipe = ("rota-baxter", "zero", "compatible", "central")[int(rng.integers(4))]
    if recipe == "compatible":
        # id is an invertible O-operator of A^C for the left multiplications of a pre-JJ algebra
        P = random_prejj_algebra(rng)
        sub = anticommutator(P)
        return Representation(sub, P.left_multiplications(), P.alpha), QQ.eye(P.dim), recipe
    n = int(rng.integers(1, 4))
    z = int(rng.integers(1, n)) if n > 1 else 1
    t = TWISTS[int(rng.integers(len(TWISTS)))]
    base = HomAlgebra(QQ, _nilpotent_table(rng, n, z, True), _scalar_twist(n, z, t))
    x = n - z
    if recipe == "rota-baxter":
        # diag(2d on X, d on Z) plus any X -> Z block is Rota-Baxter and commutes with alpha
        d = int(rng.choice(SMALL))
        P = QQ.zeros((n, n))
        for i in range(n):
            P[i, i] = 2 * d if i < x else d
        R, T = regular_rep(base), P
    elif recipe == "zero":
        m = int(rng.integers(1, 4))
        R = Representation(base, QQ.zeros((n, m, m)), QQ.eye(m) * QQ.coerce(Fraction(t) ** 2))
        T = QQ.zeros((n, m))
        T[x:, :] = _ints(rng, (z, m))
    else:
        # T maps into Z for the regular representation: both sides vanish
        R = regular_rep(base)
        T = QQ.zeros((n, n))
        T[x:, x:] = _ints(rng, (z, z))
    g = random_invertible(rng, n)
    g_inv = mat_inverse(g, QQ)
    A2 = transport(R.base, g)
    rho = np.einsum("ai,ast->ist", g_inv, R.rho)
    if R.mdim == n and recipe != "zero":
        # the module is A itself; move it along with the algebra
        rho = np.einsum("su,iut,tv->isv", g, rho, g_inv)
        return Representation(A2, rho, g @ R.phi @ g_inv), g @ T @ g_inv, recipe
    return Representation(A2, rho, R.phi), g @ T, recipe


def random_oop_candidate(rng, R: Representation) -> np.ndarray:
    return _ints(rng, (R.base.dim, R.mdim), -1, 1)


# -- matched pairs ------------------------------------------------------------------------

def random_matched_pair(rng, prejj: bool = False, dims=None) -> MatchedPairData:
    """A matched pair obtained by splitting a 2-step nilpotent algebra into two subalgebras.

    Both coordinate blocks are closed under the product, so the bicrossed sum
    of the resulting data is the original algebra.
    """
    if dims is None:
        dims = ((1, 2), (2, 1), (2, 2))[int(rng.integers(3))]
    n1, n2 = dims
    # both X blocks nonempty so the mixed products (hence the actions) can be nonzero
    x1 = int(rng.integers(1, n1 + 1))
    x2 = int(rng.integers(1, n2 + 1))
    if x1 == n1 and x2 == n2:
        if n1 > 1:
            x1 -= 1
        else:
            x2 -= 1
    # order the big algebra as X1, X2, Z1, Z2 so X = first block, Z = second block
    X1, X2 = list(range(x1)), list(range(x1, x1 + x2))
    Z1 = list(range(x1 + x2, x1 + x2 + n1 - x1))
    Z2 = list(range(x1 + x2 + n1 - x1, n1 + n2))
    n, z = n1 + n2, (n1 - x1) + (n2 - x2)
    block = {i: 1 for i in X1 + Z1}
    block.update({i: 2 for i in X2 + Z2})

    def allowed(i, j, k):
        if block[i] == block[j]:
            return block[k] == block[i]
        return True

    t = TWISTS[int(rng.integers(len(TWISTS)))]
    if z == 0:
        c = QQ.zeros((n, n, n))
    else:
        c = _nilpotent_table(rng, n, z, not prejj, allowed)
    alpha = _scalar_twist(n, z, t)
    first = X1 + Z1
    second = X2 + Z2
    # random basis change inside each block keeps both blocks subalgebras
    g = QQ.zeros((n, n))
    g1, g2 = random_invertible(rng, n1), random_invertible(rng, n2)
    g[np.ix_(first, first)] = g1
    g[np.ix_(second, second)] = g2
    big = transport(HomAlgebra(QQ, c, alpha), g)
    return split_matched_pair(big, first, second, prejj)


def split_matched_pair(C: HomAlgebra, first, second, prejj: bool = False) -> MatchedPairData:
    """Read matched-pair data off an algebra whose coordinate blocks ``first``/``second`` are subalgebras."""
    f, s = list(first), list(second)
    A1 = HomAlgebra(QQ, C.c[np.ix_(f, f, f)], C.alpha[np.ix_(f, f)])
    A2 = HomAlgebra(QQ, C.c[np.ix_(s, s, s)], C.alpha[np.ix_(s, s)])
    # e_x e_b = right2(e_b) e_x + rho1(e_x) e_b and e_a e_y = rho2(e_a) e_y + right1(e_y) e_a
    rho1 = np.transpose(C.c[np.ix_(f, s, s)], (0, 2, 1))
    right2 = np.transpose(C.c[np.ix_(f, s, f)], (1, 2, 0))
    rho2 = np.transpose(C.c[np.ix_(s, f, f)], (0, 2, 1))
    right1 = np.transpose(C.c[np.ix_(s, f, s)], (1, 2, 0))
    if prejj:
        return MatchedPairData(A1, A2, rho1, rho2, right1, right2)
    return MatchedPairData(A1, A2, rho1, rho2)


def corrupt_matched_pair(rng, M: MatchedPairData, max_tries: int = 100):
    """Flip the sign of one nonzero action entry so the pair stops being matched."""
    from .matched_pairs import check_matched_pair
    names = ["rho1", "rho2"] + (["lam1", "lam2"] if M.kind == "prejj" else [])
    spots = [(name, idx) for name in names for idx in zip(*np.nonzero(getattr(M, name) != 0))]
    if not spots:
        return None
    for k in rng.permutation(len(spots))[:max_tries]:
        name, idx = spots[k]
        arr = getattr(M, name).copy()
        arr[idx] = -arr[idx]
        fields = {key: getattr(M, key) for key in ("A1", "A2", "rho1", "rho2", "lam1", "lam2")}
        fields[name] = arr
        bad = MatchedPairData(**fields)
        if not check_matched_pair(bad):
            return bad
    return None
