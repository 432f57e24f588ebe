"""Pure NumPy implementation of the eigenvalue kernels."""

from __future__ import annotations

import numpy as np

_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


def _norms_from_eigs(w: np.ndarray, mode: int, p: float) -> np.ndarray:
    # w has shape (..., n), ascending along the last axis
    if mode == 0:
        return (np.abs(w) ** p).sum(axis=-1) ** (1.0 / p)
    if mode == 1:
        return np.abs(w).max(axis=-1)
    if mode == 2:
        return (np.clip(w, 0.0, None) ** (p / 2.0)).sum(axis=-1) ** (1.0 / p)
    if mode == 3:
        return np.sqrt(np.clip(w[..., -1], 0.0, None))
    raise ValueError(f"unknown mode {mode}")


def eigvalsh_batch(a: np.ndarray) -> np.ndarray:
    return np.linalg.eigvalsh(a)


def eigh_batch(a: np.ndarray):
    w, v = np.linalg.eigh(a)
    return w, np.ascontiguousarray(v)


def angle_norms(c0, p_mat, q_mat, cs, sn, mode, p):
    cs = np.asarray(cs, dtype=np.float64)
    sn = np.asarray(sn, dtype=np.float64)
    stack = (
        c0[None, :, :]
        + cs[:, None, None] * p_mat[None, :, :]
        + sn[:, None, None] * q_mat[None, :, :]
    )
    return _norms_from_eigs(np.linalg.eigvalsh(stack), mode, p)


def _angle_eval(c0, p_mat, q_mat, phi, mode, p):
    m = c0 + np.cos(phi) * p_mat + np.sin(phi) * q_mat
    return _norms_from_eigs(np.linalg.eigvalsh(m), mode, p)


def angle_golden(c0, p_mat, q_mat, lo, hi, mode, p, tol=1e-12, maxit=200):
    """Golden-section maximization of phi -> norm(C0 + cos(phi) P + sin(phi) Q)."""
    x1 = hi - _INVPHI * (hi - lo)
    x2 = lo + _INVPHI * (hi - lo)
    f1 = _angle_eval(c0, p_mat, q_mat, x1, mode, p)
    f2 = _angle_eval(c0, p_mat, q_mat, x2, mode, p)
    it = 0
    while hi - lo > tol and it < maxit:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INVPHI * (hi - lo)
            f2 = _angle_eval(c0, p_mat, q_mat, x2, mode, p)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INVPHI * (hi - lo)
            f1 = _angle_eval(c0, p_mat, q_mat, x1, mode, p)
        it += 1
    xm = 0.5 * (lo + hi)
    fm = _angle_eval(c0, p_mat, q_mat, xm, mode, p)
    best = max((f1, x1), (f2, x2), (fm, xm))
    return best[1], best[0]


def quad_norms(c0, p_mat, q_mat, r_mat, avals, bvals, mode, p):
    avals = np.asarray(avals, dtype=np.float64)
    bvals = np.asarray(bvals, dtype=np.float64)
    stack = (
        c0[None, :, :]
        + avals[:, None, None] * p_mat[None, :, :]
        + bvals[:, None, None] * q_mat[None, :, :]
        + (avals * avals + bvals * bvals)[:, None, None] * r_mat[None, :, :]
    )
    return _norms_from_eigs(np.linalg.eigvalsh(stack), mode, p)


def _quad_eval(c0, p_mat, q_mat, r_mat, a, b, mode, p):
    m = c0 + a * p_mat + b * q_mat + (a * a + b * b) * r_mat
    return _norms_from_eigs(np.linalg.eigvalsh(m), mode, p)


def quad_golden_axis(c0, p_mat, q_mat, r_mat, a0, b0, axis, lo, hi, mode, p,
                     tol=1e-12, maxit=200):
    """Golden-section minimization along one axis of the quad family."""

    def f(t):
        if axis == 0:
            return _quad_eval(c0, p_mat, q_mat, r_mat, t, b0, mode, p)
        return _quad_eval(c0, p_mat, q_mat, r_mat, a0, t, mode, p)

    x1 = hi - _INVPHI * (hi - lo)
    x2 = lo + _INVPHI * (hi - lo)
    f1 = f(x1)
    f2 = f(x2)
    it = 0
    while hi - lo > tol and it < maxit:
        if f1 > f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INVPHI * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INVPHI * (hi - lo)
            f1 = f(x1)
        it += 1
    xm = 0.5 * (lo + hi)
    fm = f(xm)
    best = min((f1, x1), (f2, x2), (fm, xm))
    return best[1], best[0]
