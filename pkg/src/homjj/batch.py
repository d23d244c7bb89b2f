"""Vectorized PASS/FAIL verdicts over stacks of candidates.

Every function takes structure arrays with arbitrary leading batch axes
(broadcast against each other) and returns a boolean array over those axes.
They share the residual kernels of :mod:`homjj.identities` with the
single-instance checkers, so a batch verdict and a checker verdict can only
differ by a bug in the glue code; the test-suite compares them.
"""
from __future__ import annotations

import numpy as np

from . import identities as ids

ok = ids.all_zero


def staged(arrays, core, stages):
    """AND of ``stages`` over the broadcast batch, evaluating each stage only where all earlier ones hold.

    ``core[k]`` is the number of trailing (non-batch) axes of ``arrays[k]``;
    every stage takes the arrays (restricted to the surviving candidates,
    with one flat batch axis) and returns a boolean vector.
    """
    shape = np.broadcast_shapes(*(a.shape[:a.ndim - k] for a, k in zip(arrays, core)))
    size = int(np.prod(shape, dtype=np.int64))
    flat = [np.broadcast_to(a, shape + a.shape[a.ndim - k:]).reshape((size,) + a.shape[a.ndim - k:])
            for a, k in zip(arrays, core)]
    alive = np.arange(size)
    for stage in stages:
        if not alive.size:
            break
        alive = alive[stage(*(f[alive] for f in flat))]
    out = np.zeros(size, dtype=bool)
    out[alive] = True
    return out.reshape(shape)


def commutative(c, a, mod):
    return ok(ids.commutator(c, mod), 3)


def multiplicative(c, a, mod):
    return ok(ids.multiplicativity(c, a, mod), 3)


def hom_jacobi_jordan(c, a, mod):
    return staged([c, a], [3, 2], [lambda c, a: commutative(c, a, mod),
                                   lambda c, a: multiplicative(c, a, mod),
                                   lambda c, a: ok(ids.hom_jacobian(c, a, mod), 4)])


def hom_associative(c, a, mod):
    return multiplicative(c, a, mod) & ok(ids.hom_associator(c, a, mod), 4)


def anti_hom_associative(c, a, mod):
    return multiplicative(c, a, mod) & ok(ids.anti_hom_associator(c, a, mod), 4)


def left_hom_pre_jj(c, a, mod):
    return staged([c, a], [3, 2], [lambda c, a: multiplicative(c, a, mod),
                                   lambda c, a: ok(ids.left_skew(c, a, mod), 4)])


def right_hom_pre_jj(c, a, mod):
    t = ids.anti_hom_associator(c, a, mod)
    return multiplicative(c, a, mod) & ok(ids._red(t + np.swapaxes(t, -3, -2), mod), 4)


def hom_jordan(c, a, mod):
    if mod in (2, 3):
        raise ValueError("the polarized Hom-Jordan check needs characteristic 0 or >= 5")
    return commutative(c, a, mod) & multiplicative(c, a, mod) & ok(ids.hom_jordan_polarized(c, a, mod), 5)


ALGEBRA_PREDICATES = {
    "commutative": commutative,
    "multiplicative": multiplicative,
    "hom-jacobi-jordan": hom_jacobi_jordan,
    "hom-associative": hom_associative,
    "anti-hom-associative": anti_hom_associative,
    "left-hom-pre-jj": left_hom_pre_jj,
    "right-hom-pre-jj": right_hom_pre_jj,
    "hom-jordan": hom_jordan,
}


def anticommutator(c, mod):
    return ids._red(c + np.swapaxes(c, -3, -2), mod)


# -- representations ------------------------------------------------------------------

def jj_rep(c, a, rho, phi, mod):
    return ok(ids.action_twist(rho, a, phi, mod), 3) & ok(ids.jj_action(c, a, rho, phi, mod), 4)


def prejj_rep(c, a, rho, lam, phi, mod):
    return (jj_rep(anticommutator(c, mod), a, rho, phi, mod)
            & ok(ids.action_twist(lam, a, phi, mod), 3)
            & ok(ids.prejj_right_action(c, a, rho, lam, phi, mod), 4))


# -- operators -------------------------------------------------------------------

def rota_baxter(c, p, weight, mod):
    """Identity only; commutation with the twist is a separate verdict."""
    return ok(ids.rota_baxter(c, p, weight, mod), 3)


def commutes(m, a, mod):
    return ok(ids.linear_commutator(m, a, mod), 2)


def nijenhuis(c, a, n, mod):
    return commutes(n, a, mod) & ok(ids.nijenhuis_torsion(c, n, mod), 3)


def o_operator(c, a, t, rho, right, phi, mod):
    """``right`` is rho again for a JJ representation and lambda for a pre-JJ one."""
    return ok(ids.oop_twist(t, a, phi, mod), 2) & ok(ids.oop_prejj(c, t, rho, right, mod), 3)


def morphism(c_src, a_src, c_dst, a_dst, f, mod):
    return ok(ids.morphism_product(c_src, c_dst, f, mod), 3) & ok(ids.morphism_twist(a_src, a_dst, f, mod), 2)


# -- semidirect and bicrossed sums --------------------------------------------------

def semidirect(c, a, left, right, phi, mod):
    """Batched semidirect structure tensor and twist on A + V."""
    batch = np.broadcast_shapes(c.shape[:-3], a.shape[:-2], left.shape[:-3], right.shape[:-3], phi.shape[:-2])
    n, m = c.shape[-1], phi.shape[-1]
    dtype = np.result_type(c, left, right)
    out = np.zeros(batch + (n + m,) * 3, dtype=dtype)
    out[..., :n, :n, :n] = c
    out[..., :n, n:, n:] = np.swapaxes(left, -2, -1)
    out[..., n:, :n, n:] = np.moveaxis(right, -1, -3)
    tw = np.zeros(batch + (n + m, n + m), dtype=np.result_type(a, phi))
    tw[..., :n, :n] = a
    tw[..., n:, n:] = phi
    return out, tw


def graph_subalgebra(c, a, t, left, right, phi, mod):
    """Is the graph of T: V -> A closed under the semidirect product and its twist?"""
    s, tw = semidirect(c, a, left, right, phi, mod)
    n, m = c.shape[-1], phi.shape[-1]
    eye = np.broadcast_to(np.eye(m, dtype=np.int64), t.shape[:-2] + (m, m))
    graph = np.concatenate([t, eye], axis=-2)
    prods = ids._red(np.einsum("...is,...jt,...ijk->...stk", graph, graph, s), mod)
    closure = prods[..., :n] - np.einsum("...ak,...stk->...sta", t, prods[..., n:])
    twisted = ids._red(tw @ graph, mod)
    stable = twisted[..., :n, :] - t @ twisted[..., n:, :]
    return ok(ids._red(closure, mod), 3) & ok(ids._red(stable, mod), 2)


def n_t_matrix(t, m):
    """[[0, T], [0, 0]] for a stack of n x m operators."""
    n = t.shape[-2]
    out = np.zeros(t.shape[:-2] + (n + m, n + m), dtype=t.dtype)
    out[..., :n, n:] = t
    return out


def bicross(c1, a1, c2, a2, rho1, right1, rho2, right2, mod):
    """Batched bicrossed-sum tensor and twist on A1 + A2."""
    batch = np.broadcast_shapes(c1.shape[:-3], c2.shape[:-3], rho1.shape[:-3], rho2.shape[:-3],
                                right1.shape[:-3], right2.shape[:-3], a1.shape[:-2], a2.shape[:-2])
    n1, n2 = c1.shape[-1], c2.shape[-1]
    dtype = np.result_type(c1, c2, rho1, rho2, right1, right2)
    out = np.zeros(batch + (n1 + n2,) * 3, dtype=dtype)
    out[..., :n1, :n1, :n1] = c1
    out[..., n1:, n1:, n1:] = c2
    out[..., :n1, n1:, :n1] = np.moveaxis(right2, -1, -3)
    out[..., :n1, n1:, n1:] = np.swapaxes(rho1, -2, -1)
    out[..., n1:, :n1, :n1] = np.swapaxes(rho2, -2, -1)
    out[..., n1:, :n1, n1:] = np.moveaxis(right1, -1, -3)
    tw = np.zeros(batch + (n1 + n2, n1 + n2), dtype=np.result_type(a1, a2))
    tw[..., :n1, :n1] = a1
    tw[..., n1:, n1:] = a2
    return out, tw


def matched_pair_jj(c1, a1, c2, a2, rho1, rho2, mod):
    return (hom_jacobi_jordan(c1, a1, mod) & hom_jacobi_jordan(c2, a2, mod)
            & jj_rep(c1, a1, rho1, a2, mod) & jj_rep(c2, a2, rho2, a1, mod)
            & ok(ids.matched_pair_jj(c1, a1, c2, a2, rho1, rho2, mod), 4)
            & ok(ids.matched_pair_jj(c2, a2, c1, a1, rho2, rho1, mod), 4))


def matched_pair_prejj(c1, a1, c2, a2, rho1, lam1, rho2, lam2, mod):
    first = (c1, a1, c2, a2, rho1, lam1, rho2, lam2)
    second = (c2, a2, c1, a1, rho2, lam2, rho1, lam1)
    return (left_hom_pre_jj(c1, a1, mod) & left_hom_pre_jj(c2, a2, mod)
            & prejj_rep(c1, a1, rho1, lam1, a2, mod) & prejj_rep(c2, a2, rho2, lam2, a1, mod)
            & ok(ids.matched_pair_prejj_left(*first, mod), 4)
            & ok(ids.matched_pair_prejj_right(*first, mod), 4)
            & ok(ids.matched_pair_prejj_left(*second, mod), 4)
            & ok(ids.matched_pair_prejj_right(*second, mod), 4))


# -- candidate grids ------------------------------------------------------------------

def all_arrays(p: int, shape: tuple[int, ...]) -> np.ndarray:
    """Every array of the given shape over F_p, in lexicographic order of the flattened entries."""
    size = int(np.prod(shape)) if shape else 1
    idx = np.arange(p ** size, dtype=np.int64)
    digits = (idx[:, None] // (p ** np.arange(size - 1, -1, -1, dtype=np.int64))) % p
    return digits.reshape((p ** size,) + tuple(shape))


def symmetric_tables(p: int, n: int) -> np.ndarray:
    """Every commutative n x n x n structure tensor over F_p."""
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    free = all_arrays(p, (len(pairs), n))
    out = np.zeros((free.shape[0], n, n, n), dtype=np.int64)
    for k, (i, j) in enumerate(pairs):
        out[:, i, j] = free[:, k]
        out[:, j, i] = free[:, k]
    return out
