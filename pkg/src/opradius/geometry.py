"""Norm-parallelism and Birkhoff-James orthogonality predicates.

A is norm-parallel to B when some unimodular lambda attains
N(A + lambda B) = N(A) + N(B); X is BJ-orthogonal to Y when
N(X) <= N(X + gamma Y) for every complex gamma.  Both reduce to
one- or two-dimensional searches over families whose Gram matrices
are linear in the search parameters, so the eigenvalue kernels do
all the heavy lifting.

Decision thresholds follow one convention: a predicate at scale s is
decided against 1e-7 * s.  Exact trace identities (the p > 1 trace
characterization of parallelism, the trace form of the p = 1 case)
use the tighter relative tolerance of the norm layer instead, since
no search slack enters them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .complexmat import as_matrix, cartesian_parts, hs_inner, hs_norm
from .norms import NormSpec, norm_eval, trace_functional
from .radius import (
    GRID_THETA,
    _gram_mode,
    _herm_mode,
    golden_peak,
    min_over_disk,
    norms_from_herm_eigs,
    radius_value,
    w2_closed,
)
from .spectral import polar, psd_power, singular_values

TAU_PREDICATE = 1e-7
GRID_PHASE = 4096


@dataclass(frozen=True)
class ParallelWitness:
    is_parallel: bool
    lam: complex
    gap: float


@dataclass(frozen=True)
class OrthoWitness:
    is_orthogonal: bool
    min_value: float
    gamma_min: complex


def _same_dim(a, b):
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(
            f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}"
        )
    return a, b


def gram_phase_family(a: np.ndarray, b: np.ndarray):
    """Hermitian data (C0, P, Q) with
    (A + e^(i phi) B)* (A + e^(i phi) B) = C0 + cos(phi) P + sin(phi) Q."""
    s = a.conj().T @ b
    c0 = a.conj().T @ a + b.conj().T @ b
    return c0, s + s.conj().T, 1j * (s - s.conj().T)


def norms_from_gram_eigs(w: np.ndarray, spec: NormSpec) -> np.ndarray:
    """Norms from eigenvalue rows of Gram matrices X*X (clamped at zero)."""
    w = np.maximum(w, 0.0)
    if spec.kind == "operator":
        return np.sqrt(w.max(axis=-1))
    return (w ** (spec.p / 2.0)).sum(axis=-1) ** (1.0 / spec.p)


def parallel_witness(a, b, spec: NormSpec,
                     grid: int = GRID_PHASE) -> ParallelWitness:
    """Search the unimodular circle for N(A + lambda B) = N(A) + N(B)."""
    a, b = _same_dim(a, b)
    na = norm_eval(spec, a)
    nb = norm_eval(spec, b)
    if na == 0.0 or nb == 0.0:
        raise ValueError("parallelism needs both operands nonzero")
    tau = TAU_PREDICATE * (na + nb)
    if spec.kind == "schatten" and spec.p == 2.0:
        # inner-product geometry: the circle max is exact
        g = hs_inner(a, b)
        phi = float(np.angle(g)) if g != 0 else 0.0
        value = float(np.sqrt(na * na + nb * nb + 2.0 * abs(g)))
        gap = na + nb - value
        return ParallelWitness(is_parallel=bool(gap <= tau),
                               lam=complex(np.exp(1j * phi)), gap=gap)
    c0, p_mat, q_mat = gram_phase_family(a, b)
    mode, p = _gram_mode(spec)
    _, phi, _ = golden_peak(c0, p_mat, q_mat, mode, p, grid, 2.0 * np.pi)
    lam = complex(np.exp(1j * phi))
    # Gram eigenvalues cost half the digits near zero; settle the value
    # with a direct norm of the attaining matrix
    value = norm_eval(spec, a + lam * b)
    gap = na + nb - value
    return ParallelWitness(is_parallel=bool(gap <= tau), lam=lam, gap=gap)


def parallel_gaps(a, b, specs, grid: int = GRID_PHASE):
    """parallel_witness over several norms off one shared eigenvalue sweep."""
    a, b = _same_dim(a, b)
    c0, p_mat, q_mat = gram_phase_family(a, b)
    h = 2.0 * np.pi / grid
    phi = np.arange(grid) * h
    stack = (
        c0[None, :, :]
        + np.cos(phi)[:, None, None] * p_mat[None, :, :]
        + np.sin(phi)[:, None, None] * q_mat[None, :, :]
    )
    eigs = _kernels.eigvalsh_batch(stack)
    out = []
    for spec in specs:
        na = norm_eval(spec, a)
        nb = norm_eval(spec, b)
        if na == 0.0 or nb == 0.0:
            raise ValueError("parallelism needs both operands nonzero")
        if spec.kind == "schatten" and spec.p == 2.0:
            out.append(parallel_witness(a, b, spec))
            continue
        mode, p = _gram_mode(spec)
        vals = norms_from_gram_eigs(eigs, spec)
        j = int(np.argmax(vals))
        x, f = _kernels.angle_golden(c0, p_mat, q_mat, phi[j] - h,
                                     phi[j] + h, mode, p)
        best_phi = float(x) if f > vals[j] else float(phi[j])
        lam = complex(np.exp(1j * best_phi))
        value = norm_eval(spec, a + lam * b)
        gap = na + nb - value
        tau = TAU_PREDICATE * (na + nb)
        out.append(ParallelWitness(is_parallel=bool(gap <= tau),
                                   lam=lam, gap=gap))
    return out


def linear_dependence(a, b) -> bool:
    """True iff the pair spans at most one dimension in Hilbert-Schmidt."""
    a, b = _same_dim(a, b)
    gram = np.array(
        [[hs_inner(a, a), hs_inner(a, b)],
         [hs_inner(b, a), hs_inner(b, b)]]
    )
    w = np.linalg.eigvalsh(gram)
    return bool(w[0] <= 1e-10 * w[1])


def bj_orthogonal(x, y, spec: NormSpec, grid: int = 64) -> OrthoWitness:
    """Decide N(X) <= N(X + gamma Y) for all gamma, by convex minimization."""
    x, y = _same_dim(x, y)
    ny = norm_eval(spec, y)
    if ny == 0.0:
        raise ValueError("orthogonality against Y = 0 is degenerate")
    nx = norm_eval(spec, x)
    if nx == 0.0:
        return OrthoWitness(is_orthogonal=True, min_value=0.0, gamma_min=0j)
    if spec.kind == "schatten" and spec.p == 2.0:
        gamma = -hs_inner(x, y) / (ny * ny)
        value = hs_norm(x + gamma * y)
    else:
        # the minimum lies in |gamma| <= 2 N(X)/N(Y): beyond that radius
        # N(gamma Y) - N(X) alone exceeds N(X)
        value, gamma = min_over_disk(x, y, spec, radius=2.0 * nx / ny,
                                     grid=grid)
    if value > nx:
        value, gamma = nx, 0j
    return OrthoWitness(
        is_orthogonal=bool(value >= nx - TAU_PREDICATE * nx),
        min_value=value,
        gamma_min=gamma,
    )


def _w2_lambda(t, a, lam):
    """Vectorized w_2(T + lambda A) over an array of scalars lambda."""
    lam = np.asarray(lam, dtype=np.complex128)
    f2 = (hs_norm(t) ** 2 + np.abs(lam) ** 2 * hs_norm(a) ** 2
          + 2.0 * np.real(np.conj(lam) * hs_inner(t, a)))
    tr = (trace_functional(t @ t) + 2.0 * lam * trace_functional(t @ a)
          + lam * lam * trace_functional(a @ a))
    return np.sqrt((f2 + np.abs(tr)) / 2.0)


def wn_lambda_values(t, a, lambdas, spec: NormSpec,
                     inner_grid: int = 128) -> np.ndarray:
    """w_N(T + lambda A) for an array of lambdas, batched.

    One eigenvalue sweep covers the whole (lambda, theta) product grid;
    each lambda then gets a golden polish around its best angle.
    """
    t, a = _same_dim(t, a)
    lam = np.asarray(lambdas, dtype=np.complex128).ravel()
    if spec.kind == "schatten" and spec.p == 2.0:
        return _w2_lambda(t, a, lam)
    ht, kt = cartesian_parts(t)
    ha, ka = cartesian_parts(a)
    # Cartesian parts are linear in lambda = alpha + i beta
    al = lam.real[:, None, None]
    be = lam.imag[:, None, None]
    hl = ht[None, :, :] + al * ha[None, :, :] - be * ka[None, :, :]
    kl = kt[None, :, :] + al * ka[None, :, :] + be * ha[None, :, :]
    n = t.shape[0]
    m = inner_grid
    h = np.pi / m
    theta = np.arange(m) * h
    cs, sn = np.cos(theta), np.sin(theta)
    mode, p = _herm_mode(spec)
    zero = np.zeros((n, n), dtype=np.complex128)
    out = np.empty(len(lam))
    # chunk the (lambda, theta) stack to bound the working set
    chunk = max(1, (4 << 20) // (m * n * n * 16))
    for lo in range(0, len(lam), chunk):
        hi = min(lo + chunk, len(lam))
        stack = (cs[None, :, None, None] * hl[lo:hi, None, :, :]
                 - sn[None, :, None, None] * kl[lo:hi, None, :, :])
        eigs = _kernels.eigvalsh_batch(stack.reshape(-1, n, n))
        vals = norms_from_herm_eigs(eigs, spec).reshape(hi - lo, m)
        best = np.argmax(vals, axis=1)
        for i in range(hi - lo):
            j = int(best[i])
            x, f = _kernels.angle_golden(zero, hl[lo + i], -kl[lo + i],
                                         theta[j] - h, theta[j] + h, mode, p)
            out[lo + i] = max(float(f), float(vals[i, j]))
    return out


def _golden_min(f, lo, hi, tol):
    """Plain golden-section minimization of a scalar callable."""
    invphi = (np.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = f(x2)
    return (x1, f1) if f1 <= f2 else (x2, f2)


_COMPASS = tuple(
    (float(np.cos(u)), float(np.sin(u)))
    for u in np.arange(8) * (np.pi / 4.0)
)


def wn_orthogonal(t, a, spec: NormSpec, grid: int = 13,
                  inner_grid: int = 128) -> OrthoWitness:
    """BJ orthogonality in the radius ordering: w_N(T) <= w_N(T + lambda A).

    Same convex two-phase search as the scalar distance, with the radius
    itself (a norm on matrices) as the objective.
    """
    t, a = _same_dim(t, a)
    if norm_eval(spec, a) == 0.0:
        raise ValueError("orthogonality against A = 0 is degenerate")
    wt = radius_value(t, spec)
    if wt == 0.0:
        return OrthoWitness(is_orthogonal=True, min_value=0.0, gamma_min=0j)
    wa = radius_value(a, spec, grid=inner_grid)
    rad = 2.0 * wt / wa

    def f(lam: complex) -> float:
        return radius_value(t + lam * a, spec, grid=inner_grid)

    axis = np.linspace(-rad, rad, grid)
    aa, bb = np.meshgrid(axis, axis, indexing="ij")
    cand = np.append(aa.ravel() + 1j * bb.ravel(), 0j)
    vals = wn_lambda_values(t, a, cand, spec, inner_grid=inner_grid)
    j = int(np.argmin(vals))
    lam0 = complex(cand[j])
    fbest = float(vals[j])

    step = 2.0 * rad / max(grid - 1, 1)
    floor = 1e-9 * max(1.0, rad)
    for _ in range(200):
        tiny = 1e-12 * max(1.0, fbest)
        probes = lam0 + step * np.array([complex(ca, cb)
                                         for ca, cb in _COMPASS])
        pv = wn_lambda_values(t, a, probes, spec, inner_grid=inner_grid)
        k = int(np.argmin(pv))
        if pv[k] < fbest - tiny:
            ca, cb = _COMPASS[k]
            d = complex(ca, cb)
            tt, ff = _golden_min(lambda u: f(lam0 + u * d), 0.0, 2.0 * step,
                                 tol=max(1e-10, 2e-3 * step))
            if ff < pv[k]:
                fbest, lam0 = float(ff), lam0 + tt * d
            else:
                fbest, lam0 = float(pv[k]), complex(probes[k])
            continue
        step *= 0.5
        if step < floor:
            break
    min_value = radius_value(t + lam0 * a, spec)
    if min_value > wt:
        min_value, lam0 = wt, 0j
    return OrthoWitness(
        is_orthogonal=bool(min_value >= wt - TAU_PREDICATE * wt),
        min_value=min_value,
        gamma_min=lam0,
    )


def parallel_trace_condition(a, b, p: float) -> bool:
    """Trace characterization of parallelism for 1 < p < infinity:
    ||A||_p |tr(|A|^(p-1) U* B)| = ||B||_p tr(|A|^p), U the polar isometry."""
    if not p > 1.0 or not np.isfinite(p):
        raise ValueError("trace characterization needs 1 < p < inf")
    a, b = _same_dim(a, b)
    sa = singular_values(a)
    sb = singular_values(b)
    na = float((sa ** p).sum() ** (1.0 / p))
    nb = float((sb ** p).sum() ** (1.0 / p))
    if na == 0.0 or nb == 0.0:
        raise ValueError("parallelism needs both operands nonzero")
    parts = polar(a)
    lhs = na * abs(trace_functional(
        psd_power(parts.modulus, p - 1.0) @ parts.isometry_part.conj().T @ b
    ))
    rhs = nb * float((sa ** p).sum())
    return bool(abs(lhs - rhs) <= max(1e-8 * max(lhs, rhs), 1e-12))


@dataclass(frozen=True)
class W1Conditions:
    cond5: bool
    cond7: bool
    cond10: bool | None


def _phase_min_fro(m1: np.ndarray, m2: np.ndarray) -> float:
    # min over |lambda| = 1 of ||M1 - lambda M2||_F, exact by expanding
    # the square: the cross term is a rotated inner product
    g = hs_inner(m2, m1)
    val = hs_norm(m1) ** 2 + hs_norm(m2) ** 2 - 2.0 * abs(g)
    return float(np.sqrt(max(val, 0.0)))


def _abs_diff_fro(a: np.ndarray, target: np.ndarray, psi: np.ndarray,
                  c0, p_mat, q_mat) -> np.ndarray:
    """||  |A + e^(i psi) A*| - target ||_F on a batch of phases."""
    stack = (
        c0[None, :, :]
        + np.cos(psi)[:, None, None] * p_mat[None, :, :]
        + np.sin(psi)[:, None, None] * q_mat[None, :, :]
    )
    w, v = _kernels.eigh_batch(stack)
    s = np.sqrt(np.maximum(w, 0.0))
    t2 = float(hs_norm(target) ** 2)
    # tr(|X| target) = sum_i s_i <v_i, target v_i>
    quad = np.einsum("kij,kjl,kli->ki", v.conj().transpose(0, 2, 1),
                     np.broadcast_to(target, (len(psi),) + target.shape),
                     v).real
    val = w.sum(axis=1) + t2 - 2.0 * (s * quad).sum(axis=1)
    return np.sqrt(np.maximum(val, 0.0))


def w1_parallel_conditions(a, grid: int = GRID_PHASE) -> W1Conditions:
    """Unimodular-lambda identities tied to trace-norm parallelism of (A, A*).

    cond5:  (A*)^2 = lambda |A| |A*| for some |lambda| = 1
    cond7:  |A + lambda A*| = |A| + |A*| for some |lambda| = 1
    cond10: |tr(|A| A^(-1) A*)| = ||A*||_1, only when A is invertible
    """
    a = as_matrix(a)
    parts = polar(a)
    parts_star = polar(a.conj().T)
    scale = hs_norm(a) ** 2

    m1 = (a.conj().T) @ (a.conj().T)
    m2 = parts.modulus @ parts_star.modulus
    cond5 = _phase_min_fro(m1, m2) <= TAU_PREDICATE * max(scale, 1e-300)

    target = parts.modulus + parts_star.modulus
    astar = a.conj().T
    s = a.conj().T @ astar
    c0 = a.conj().T @ a + astar.conj().T @ astar
    p_mat = s + s.conj().T
    q_mat = 1j * (s - s.conj().T)
    h = 2.0 * np.pi / grid
    psi = np.arange(grid) * h
    vals = _abs_diff_fro(a, target, psi, c0, p_mat, q_mat)
    j = int(np.argmin(vals))

    def g(u: float) -> float:
        return float(_abs_diff_fro(a, target, np.array([u]),
                                   c0, p_mat, q_mat)[0])

    _, fmin = _golden_min(g, psi[j] - h, psi[j] + h, tol=1e-12)
    cond7 = min(float(vals[j]), fmin) <= TAU_PREDICATE * max(
        hs_norm(target), 1e-300
    )

    sv = singular_values(a)
    cond10: bool | None = None
    if sv[0] > 0 and sv[-1] > 1e-10 * sv[0]:
        tr = trace_functional(parts.modulus @ np.linalg.solve(a, astar))
        n1 = float(sv.sum())
        cond10 = bool(abs(abs(tr) - n1) <= max(1e-8 * n1, 1e-12))
    return W1Conditions(cond5=bool(cond5), cond7=bool(cond7), cond10=cond10)
