"""Residual tensors of every structural identity, evaluated on basis tuples.

Each kernel takes structure data as arrays and returns the residual of one
identity on all basis tuples at once; the identity holds exactly when the
residual is zero.  Conventions:

* ``c[..., i, j, k]`` -- coefficient of e_k in e_i e_j;
* ``a[..., l, k]`` -- coefficient of e_l in alpha(e_k) (columns are images);
* ``rho[..., i, s, t]`` -- the action matrix rho(e_i) acting on column vectors.

A leading ``...`` carries batch axes, so exhaustive searches evaluate whole
families of candidates in one call.  ``mod`` is the field modulus (``None``
over Q); all returned arrays are reduced.
"""
from __future__ import annotations

from itertools import permutations

import numpy as np

_E = np.einsum


def _red(x, mod):
    return np.mod(x, mod) if mod else x


def _swap(t, ax1, ax2):
    return np.swapaxes(t, ax1, ax2)


# -- algebra identities ------------------------------------------------------

def commutator(c, mod=None):
    """c[i,j] - c[j,i]; indices (i, j)."""
    return _red(c - _swap(c, -3, -2), mod)


def multiplicativity(c, a, mod=None):
    """alpha(e_i e_j) - alpha(e_i) alpha(e_j); indices (i, j)."""
    lhs = _E("...ijk,...rk->...ijr", c, a)
    half = _red(_E("...pi,...pqr->...iqr", a, c), mod)
    rhs = _E("...qj,...iqr->...ijr", a, half)
    return _red(lhs - rhs, mod)


def _right_twisted(c, a, mod):
    """(e_m, e_k) -> e_m alpha(e_k)."""
    return _red(_E("...lk,...mlr->...mkr", a, c), mod)


def _left_twisted(c, a, mod):
    """(e_i, e_m) -> alpha(e_i) e_m."""
    return _red(_E("...li,...lmr->...imr", a, c), mod)


def outer_twisted(c, a, mod=None):
    """(e_i e_j) alpha(e_k); indices (i, j, k)."""
    rt = _right_twisted(c, a, mod)
    n = c.shape[-1]
    flat = np.matmul(c.reshape(c.shape[:-3] + (n * n, n)), rt.reshape(rt.shape[:-3] + (n, n * n)))
    return _red(flat.reshape(flat.shape[:-2] + (n,) * 4), mod)


def inner_twisted(c, a, mod=None):
    """alpha(e_i) (e_j e_k); indices (i, j, k)."""
    lt = _left_twisted(c, a, mod)
    n = c.shape[-1]
    # [j k, i r] = sum_m c[j, k, m] lt[i, m, r], then move i to the front
    flat = np.matmul(c.reshape(c.shape[:-3] + (n * n, n)),
                     np.swapaxes(lt, -3, -2).reshape(lt.shape[:-3] + (n, n * n)))
    return _red(np.moveaxis(flat.reshape(flat.shape[:-2] + (n,) * 4), -2, -4), mod)


def hom_jacobian(c, a, mod=None):
    """Cyclic sum of (e_i e_j) alpha(e_k); indices (i, j, k)."""
    d = outer_twisted(c, a, mod)
    return _red(d + np.moveaxis(d, -2, -4) + np.moveaxis(d, -4, -2), mod)


def hom_associator(c, a, mod=None):
    return _red(outer_twisted(c, a, mod) - inner_twisted(c, a, mod), mod)


def anti_hom_associator(c, a, mod=None):
    return _red(outer_twisted(c, a, mod) + inner_twisted(c, a, mod), mod)


def left_skew(c, a, mod=None):
    """as^t(e_i,e_j,e_k) + as^t(e_j,e_i,e_k); indices (i, j, k)."""
    t = anti_hom_associator(c, a, mod)
    return _red(t + _swap(t, -4, -3), mod)


def hom_jordan_polarized(c, a, mod=None):
    """Symmetrization over (i, j, k) of as_alpha(e_i e_j, alpha(e_l), alpha(e_k)).

    Indices (i, j, k, l): the three polarized x-slots and the y-slot.
    """
    a2 = _red(_E("...ij,...jk->...ik", a, a), mod)
    d = outer_twisted(c, a, mod)  # (e_i e_j) alpha(e_l) stored at [i, j, l]
    y2 = _red(_E("...lk,...tlr->...tkr", a2, c), mod)  # e_t alpha^2(e_k)
    first = _E("...ijlt,...tkr->...ijklr", d, y2)
    au = _red(_E("...ijm,...tm->...ijt", c, a), mod)  # alpha(e_i e_j)
    aa = _red(_E("...sl,...qk->...lksq", a, a), mod)
    w = _red(_E("...lksq,...sqv->...lkv", aa, c), mod)  # alpha(e_l) alpha(e_k)
    g = _red(_E("...ijt,...tqr->...ijqr", au, c), mod)
    second = _E("...ijqr,...lkq->...ijklr", g, w)
    f = _red(first - second, mod)
    base = f.ndim - 5
    total = 0
    for perm in permutations(range(3)):
        axes = list(range(f.ndim))
        axes[base:base + 3] = [base + p for p in perm]
        total = total + f.transpose(axes)
    return _red(total, mod)


def linear_commutator(m, a, mod=None):
    """m alpha - alpha m (both square); indices (row, col)."""
    return _red(_E("...ij,...jk->...ik", m, a) - _E("...ij,...jk->...ik", a, m), mod)


def _image_products(c, m, mod):
    """(i, j) -> m(e_i) m(e_j)."""
    x = _red(_E("...is,...ijr->...sjr", m, c), mod)
    return _red(_E("...sjr,...jt->...str", x, m), mod)


def _apply(m, t, mod):
    """Apply the square matrix m to the last axis of t."""
    return _red(_E("...ra,...ija->...ijr", m, t), mod)


def rota_baxter(c, p, weight=0, mod=None):
    """P(e_i)P(e_j) - P(P(e_i)e_j + e_iP(e_j) + weight e_ie_j); indices (i, j)."""
    left = _red(_E("...ai,...ajr->...ijr", p, c), mod)
    right = _red(_E("...bj,...ibr->...ijr", p, c), mod)
    inner = _red(left + right + weight * c, mod)
    return _red(_image_products(c, p, mod) - _apply(p, inner, mod), mod)


def nijenhuis_torsion(c, n, mod=None):
    """N(e_i)N(e_j) - N(N(e_i)e_j + e_iN(e_j) - N(e_ie_j)); indices (i, j)."""
    left = _red(_E("...ai,...ajr->...ijr", n, c), mod)
    right = _red(_E("...bj,...ibr->...ijr", n, c), mod)
    inner = _red(left + right - _apply(n, c, mod), mod)
    return _red(_image_products(c, n, mod) - _apply(n, inner, mod), mod)


def nijenhuis_product(c, n, mod=None):
    """Structure tensor of x *_N y = N(x)y + xN(y) - N(xy)."""
    left = _E("...ai,...ajr->...ijr", n, c)
    right = _E("...bj,...ibr->...ijr", n, c)
    return _red(left + right - _apply(n, c, mod), mod)


def morphism_product(c_src, c_dst, f, mod=None):
    """f(e_i e_j) - f(e_i) f(e_j); indices (i, j) of the source."""
    lhs = _E("...rk,...ijk->...ijr", f, c_src)
    x = _red(_E("...pi,...pqr->...iqr", f, c_dst), mod)
    rhs = _E("...iqr,...qj->...ijr", x, f)
    return _red(lhs - rhs, mod)


def morphism_twist(a_src, a_dst, f, mod=None):
    """f alpha_src - alpha_dst f; indices (row, col)."""
    return _red(_E("...ij,...jk->...ik", f, a_src) - _E("...ij,...jk->...ik", a_dst, f), mod)


# -- representations --------------------------------------------------------

def twisted_action(rho, a, mod=None):
    """i -> rho(alpha(e_i))."""
    return _red(_E("...li,...lst->...ist", a, rho), mod)


def action_of_products(c, rho, mod=None):
    """(i, j) -> rho(e_i e_j)."""
    return _red(_E("...ijk,...kst->...ijst", c, rho), mod)


def action_twist(rho, a, phi, mod=None):
    """phi rho(e_i) - rho(alpha(e_i)) phi; index i."""
    lhs = _E("...su,...iut->...ist", phi, rho)
    rhs = _E("...isu,...ut->...ist", twisted_action(rho, a, mod), phi)
    return _red(lhs - rhs, mod)


def jj_action(c, a, rho, phi, mod=None):
    """rho(e_ie_j)phi + rho(alpha e_i)rho(e_j) + rho(alpha e_j)rho(e_i); indices (i, j)."""
    t0 = _E("...ijsu,...ut->...ijst", action_of_products(c, rho, mod), phi)
    t1 = _red(_E("...isu,...jut->...ijst", twisted_action(rho, a, mod), rho), mod)
    return _red(t0 + t1 + _swap(t1, -4, -3), mod)


def prejj_right_action(c, a, rho, lam, phi, mod=None):
    """lam(a e_j)lam(e_i) + lam(e_i.e_j)phi + lam(a e_j)rho(e_i) + rho(a e_i)lam(e_j); indices (i, j)."""
    lt = twisted_action(lam, a, mod)
    rt = twisted_action(rho, a, mod)
    t1 = _E("...jsu,...iut->...ijst", lt, lam)
    t2 = _E("...ijsu,...ut->...ijst", action_of_products(c, lam, mod), phi)
    t3 = _E("...jsu,...iut->...ijst", lt, rho)
    t4 = _E("...isu,...jut->...ijst", rt, lam)
    return _red(t1 + t2 + t3 + t4, mod)


# -- O-operators ---------------------------------------------------------------

def oop_twist(t, a, phi, mod=None):
    """T phi - alpha T; indices (row, col)."""
    return _red(_E("...as,...st->...at", t, phi) - _E("...ab,...bt->...at", a, t), mod)


def _oop(c, t, left_action, right_action, mod):
    tt = _image_products(c, t, mod)  # [s, t] -> T(f_s) T(f_t)
    r_left = _red(_E("...is,...ixy->...sxy", t, left_action), mod)
    r_right = _red(_E("...is,...ixy->...sxy", t, right_action), mod)
    w = _E("...sxt->...stx", r_left) + _E("...txs->...stx", r_right)
    return _red(tt - _red(_E("...ax,...stx->...sta", t, _red(w, mod)), mod), mod)


def oop_jj(c, t, rho, mod=None):
    """T(u)T(v) - T(rho(Tu)v + rho(Tv)u) on module basis pairs."""
    return _oop(c, t, rho, rho, mod)


def oop_prejj(c, t, rho, lam, mod=None):
    """T(u).T(v) - T(rho(Tu)v + lam(Tv)u) on module basis pairs."""
    return _oop(c, t, rho, lam, mod)


# -- matched pairs ----------------------------------------------------------

def _twisted_right(c, a, mod):
    """(q, t) -> e_q alpha(e_t)."""
    return _red(_E("...wt,...qwr->...qtr", a, c), mod)


def _twisted_left(c, a, mod):
    """(s, q) -> alpha(e_s) e_q."""
    return _red(_E("...ws,...wqr->...sqr", a, c), mod)


def _compose_actions(outer, inner, mod):
    """(s, i) -> outer(inner(e_s) e_i) as a matrix [s, i, r, q]."""
    return _red(_E("...sli,...lrq->...sirq", inner, outer), mod)


def matched_pair_jj(c1, a1, c2, a2, rho1, rho2, mod=None):
    """Mixed condition acting into the second factor; indices (x, a, b).

    rho1(alpha1 x)(a.b) + (rho1(x)a).alpha2(b) + (rho1(x)b).alpha2(a)
    + rho1(rho2(a)x)alpha2(b) + rho1(rho2(b)x)alpha2(a).
    Swap the roles of the factors for the companion condition.
    """
    r1a = twisted_action(rho1, a1, mod)
    t1 = _E("...irq,...stq->...istr", r1a, c2)
    t2 = _red(_E("...iqs,...qtr->...istr", rho1, _twisted_right(c2, a2, mod)), mod)
    t4 = _red(_E("...sirq,...qt->...istr", _compose_actions(rho1, rho2, mod), a2), mod)
    return _red(t1 + t2 + _swap(t2, -3, -2) + t4 + _swap(t4, -3, -2), mod)


def matched_pair_prejj_left(c1, a1, c2, a2, rho1, lam1, rho2, lam2, mod=None):
    """First pre-JJ mixed condition; indices (x, a, b), values in the second factor.

    rho1(alpha1 x)(a T b) + rho1(rho2(a)x + lam2(a)x)alpha2(b)
    + (rho1(x)a + lam1(x)a) T alpha2(b) + lam1(lam2(b)x)alpha2(a)
    + alpha2(a) T (rho1(x)b).
    """
    t1 = _E("...irq,...stq->...istr", twisted_action(rho1, a1, mod), c2)
    t2 = _E("...sirq,...qt->...istr", _compose_actions(rho1, _red(rho2 + lam2, mod), mod), a2)
    t3 = _E("...iqs,...qtr->...istr", _red(rho1 + lam1, mod), _twisted_right(c2, a2, mod))
    t4 = _E("...tirq,...qs->...istr", _compose_actions(lam1, lam2, mod), a2)
    t5 = _E("...sqr,...iqt->...istr", _twisted_left(c2, a2, mod), rho1)
    return _red(t1 + t2 + t3 + t4 + t5, mod)


def matched_pair_prejj_right(c1, a1, c2, a2, rho1, lam1, rho2, lam2, mod=None):
    """Second pre-JJ mixed condition; indices (x, a, b), values in the second factor.

    lam1(alpha1 x)(a T b + b T a) + alpha2(a) T (lam1(x)b) + alpha2(b) T (lam1(x)a)
    + lam1(rho2(a)x)alpha2(b) + lam1(rho2(b)x)alpha2(a).
    """
    sym = _red(c2 + _swap(c2, -3, -2), mod)
    u1 = _E("...irq,...stq->...istr", twisted_action(lam1, a1, mod), sym)
    u2 = _red(_E("...sqr,...iqt->...istr", _twisted_left(c2, a2, mod), lam1), mod)
    u4 = _red(_E("...sirq,...qt->...istr", _compose_actions(lam1, rho2, mod), a2), mod)
    return _red(u1 + u2 + _swap(u2, -3, -2) + u4 + _swap(u4, -3, -2), mod)


def all_zero(t, trailing):
    """Boolean over batch axes: does ``t`` vanish on its ``trailing`` last axes?"""
    axes = tuple(range(t.ndim - trailing, t.ndim))
    return ~np.any(t != 0, axis=axes)
