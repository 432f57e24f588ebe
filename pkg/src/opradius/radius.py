"""Generalized numerical radius w_N, the closed p=2 form, bounds, and D_{N,A}.

w_N(A) = sup over theta of N(cos(theta) H - sin(theta) K) with (H, K) the
Cartesian parts.  The map has period pi and Lipschitz constant at most
N(H) + N(K), which turns a uniform grid plus golden refinement into a
certified enclosure: the reported bracket always covers the true supremum.

The distance to scalars D_{N,A} = inf over complex lambda of N(A - lambda I)
is convex in lambda; it is minimized by a coarse grid on the disk
|lambda| <= 2 N(A) followed by derivative-free line minimization along
axis and diagonal directions with shrinking step (plus a direction probe
before each step cut, so kinks of the nonsmooth norms cannot stall it).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .complexmat import as_matrix, cartesian_parts, hs_norm
from .norms import NormSpec, norm_eval, trace_functional

GRID_THETA = 1024
GRID_DISK = 64


@dataclass(frozen=True)
class MaximizerResult:
    value: float
    argmax_theta: float
    bracket: float


@dataclass(frozen=True)
class ScalarDistance:
    distance: float
    center: complex


def _herm_mode(spec: NormSpec):
    if spec.kind == "operator":
        return _kernels.MODE_HERM_OPERATOR, 0.0
    return _kernels.MODE_HERM_SCHATTEN, spec.p


def _gram_mode(spec: NormSpec):
    if spec.kind == "operator":
        return _kernels.MODE_GRAM_OPERATOR, 0.0
    return _kernels.MODE_GRAM_SCHATTEN, spec.p


def norms_from_herm_eigs(w: np.ndarray, spec: NormSpec) -> np.ndarray:
    """Norm of Hermitian matrices from their eigenvalue rows."""
    if spec.kind == "operator":
        return np.abs(w).max(axis=-1)
    return (np.abs(w) ** spec.p).sum(axis=-1) ** (1.0 / spec.p)


def _top_local_maxima(vals: np.ndarray, count: int = 3) -> list[int]:
    """Indices of up to `count` circular local maxima, best first."""
    m = len(vals)
    if m <= count:
        return list(np.argsort(vals)[::-1])
    left = np.roll(vals, 1)
    right = np.roll(vals, -1)
    local = np.where((vals >= left) & (vals >= right))[0]
    if len(local) == 0:
        local = np.arange(m)
    order = local[np.argsort(vals[local])[::-1]]
    picked: list[int] = []
    for j in order:
        if all(min((j - i) % m, (i - j) % m) > 1 for i in picked):
            picked.append(int(j))
        if len(picked) == count:
            break
    return picked


def golden_peak(c0, p_mat, q_mat, mode, p, grid, period):
    """Grid plus top-3 golden refinement for theta -> norm of the angle
    family C0 + cos(theta) P + sin(theta) Q.  Returns (value, argmax,
    grid_max); shared by the radius and the unimodular searches."""
    h = period / grid
    theta = np.arange(grid) * h
    vals = _kernels.angle_norms(c0, p_mat, q_mat, np.cos(theta),
                                np.sin(theta), mode, p)
    grid_max = float(vals.max())
    best_x = float(theta[int(np.argmax(vals))])
    best_f = grid_max
    for j in _top_local_maxima(vals):
        x, f = _kernels.angle_golden(c0, p_mat, q_mat,
                                     theta[j] - h, theta[j] + h, mode, p)
        if f > best_f:
            best_f = float(f)
            best_x = float(x)
    return best_f, best_x % period, grid_max


def angle_sup(p_mat, q_mat, spec: NormSpec, grid: int = GRID_THETA,
              period: float = np.pi) -> MaximizerResult:
    """Certified sup over theta of N(cos(theta) P + sin(theta) Q)."""
    p_mat = as_matrix(p_mat)
    q_mat = as_matrix(q_mat)
    lip = norm_eval(spec, p_mat) + norm_eval(spec, q_mat)
    if lip == 0.0:
        return MaximizerResult(value=0.0, argmax_theta=0.0, bracket=0.0)
    mode, p = _herm_mode(spec)
    zero = np.zeros_like(p_mat)
    best_f, best_x, grid_max = golden_peak(zero, p_mat, q_mat, mode, p,
                                           grid, period)
    h = period / grid
    bracket = min(
        lip * h / 2,
        max(0.0, grid_max + lip * h / 2 - best_f) + lip * 1e-12,
    )
    return MaximizerResult(value=best_f, argmax_theta=best_x, bracket=bracket)


def angle_sup_multi(p_mat, q_mat, specs, grid: int = GRID_THETA,
                    period: float = np.pi) -> list[MaximizerResult]:
    """angle_sup for several norms off one shared eigenvalue sweep."""
    p_mat = as_matrix(p_mat)
    q_mat = as_matrix(q_mat)
    h = period / grid
    theta = np.arange(grid) * h
    stack = (
        np.cos(theta)[:, None, None] * p_mat[None, :, :]
        + np.sin(theta)[:, None, None] * q_mat[None, :, :]
    )
    eigs = _kernels.eigvalsh_batch(stack)
    zero = np.zeros_like(p_mat)
    out = []
    for spec in specs:
        lip = norm_eval(spec, p_mat) + norm_eval(spec, q_mat)
        if lip == 0.0:
            out.append(MaximizerResult(0.0, 0.0, 0.0))
            continue
        mode, p = _herm_mode(spec)
        vals = norms_from_herm_eigs(eigs, spec)
        grid_max = float(vals.max())
        best_x = float(theta[int(np.argmax(vals))])
        best_f = grid_max
        for j in _top_local_maxima(vals):
            x, f = _kernels.angle_golden(zero, p_mat, q_mat,
                                         theta[j] - h, theta[j] + h, mode, p)
            if f > best_f:
                best_f = float(f)
                best_x = float(x)
        bracket = min(
            lip * h / 2,
            max(0.0, grid_max + lip * h / 2 - best_f) + lip * 1e-12,
        )
        out.append(MaximizerResult(best_f, best_x % period, bracket))
    return out


def wn_max(a, spec: NormSpec, grid: int = GRID_THETA) -> MaximizerResult:
    """w_N(A) = sup over theta of N(Re(e^(i theta) A)), certified."""
    h, k = cartesian_parts(a)
    return angle_sup(h, -k, spec, grid=grid)


def wn_max_im(a, spec: NormSpec, grid: int = GRID_THETA) -> MaximizerResult:
    """sup over theta of N(Im(e^(i theta) A)); equals w_N(A)."""
    h, k = cartesian_parts(a)
    return angle_sup(k, h, spec, grid=grid)


def circle_sup(a, spec: NormSpec, grid: int = GRID_THETA) -> MaximizerResult:
    """sup of N(alpha Re(A) + beta Im(A)) over the unit circle alpha^2+beta^2=1."""
    h, k = cartesian_parts(a)
    return angle_sup(h, k, spec, grid=grid)


def w2_closed(a) -> float:
    """w_2(A) = sqrt((||A||_2^2 + |tr(A^2)|) / 2)."""
    a = as_matrix(a)
    f2 = hs_norm(a) ** 2
    t2 = abs(trace_functional(a @ a))
    return float(np.sqrt((f2 + t2) / 2.0))


def radius_value(a, spec: NormSpec, grid: int = GRID_THETA) -> float:
    """w_N(A) by the production path: closed form at p=2, grid sup otherwise."""
    if spec.kind == "schatten" and spec.p == 2.0:
        return w2_closed(a)
    return wn_max(a, spec, grid=grid).value


def radius_values(a, specs, grid: int = GRID_THETA) -> list[float]:
    """w_N(A) for several norms, sharing one eigenvalue sweep."""
    need_grid = [s for s in specs if not (s.kind == "schatten" and s.p == 2.0)]
    if need_grid:
        h, k = cartesian_parts(a)
        results = angle_sup_multi(h, -k, need_grid, grid=grid)
        by_spec = dict(zip(need_grid, results))
    else:
        by_spec = {}
    out = []
    for s in specs:
        if s.kind == "schatten" and s.p == 2.0:
            out.append(w2_closed(a))
        else:
            out.append(by_spec[s].value)
    return out


def wn_bounds(a, spec: NormSpec) -> tuple[float, float]:
    """Theoretical enclosure: lower <= w_N(A) <= upper = N(A)."""
    a = as_matrix(a)
    upper = norm_eval(spec, a)
    if spec.kind == "operator":
        return upper / 2.0, upper
    p = spec.p
    if p == 2.0:
        t2 = abs(trace_functional(a @ a))
        lower = max(upper / np.sqrt(2.0), (upper + np.sqrt(t2)) / 2.0)
    elif p < 2.0:
        lower = 2.0 ** (-1.0 / p) * upper
    else:
        lower = 2.0 ** (1.0 / p - 1.0) * upper
    return float(lower), float(upper)


def _quad_family(x, y):
    """Hermitian data (C0, P, Q, R) with
    (X + (a+ib) Y)* (X + (a+ib) Y) = C0 + a P + b Q + (a^2+b^2) R."""
    s = x.conj().T @ y
    c0 = x.conj().T @ x
    p_mat = s + s.conj().T
    q_mat = 1j * (s - s.conj().T)
    r_mat = y.conj().T @ y
    return c0, p_mat, q_mat, r_mat


# eight compass directions: a positive spanning set of the plane, so a
# failed probe round certifies local optimality at the current step scale
# even at kinks of the nonsmooth norms
_DIRS = tuple(
    (float(np.cos(t)), float(np.sin(t)))
    for t in np.arange(8) * (np.pi / 4.0)
)


def _line_min(c0, p_mat, q_mat, r_mat, a0, b0, ca, cb, halfwidth, mode, p):
    """Golden minimization of the quad family along (a0,b0) + t (ca,cb).

    The interval only needs resolving relative to its own width: the outer
    descent shrinks the width geometrically, so full precision arrives with
    the final steps anyway and early line searches stay cheap.
    """
    base = c0 + a0 * p_mat + b0 * q_mat + (a0 * a0 + b0 * b0) * r_mat
    dir_mat = ca * p_mat + cb * q_mat + 2.0 * (a0 * ca + b0 * cb) * r_mat
    zero = np.zeros_like(c0)
    tol = max(1e-13, 2e-3 * halfwidth)
    t, f = _kernels.quad_golden_axis(base, dir_mat, zero, r_mat, 0.0, 0.0, 0,
                                     -halfwidth, halfwidth, mode, p, tol=tol)
    return float(t), float(f)


def min_over_disk(x, y, spec: NormSpec, radius: float,
                  grid: int = GRID_DISK) -> tuple[float, complex]:
    """Minimize the convex map gamma -> N(X + gamma Y) over a centered disk.

    Returns (min value, argmin).  The value is re-evaluated at the argmin
    with a full SVD, since the Gram-eigenvalue route loses half the digits
    when the minimum is near zero.
    """
    x = as_matrix(x)
    y = as_matrix(y)
    c0, p_mat, q_mat, r_mat = _quad_family(x, y)
    mode, p = _gram_mode(spec)

    axis = np.linspace(-radius, radius, grid)
    aa, bb = np.meshgrid(axis, axis, indexing="ij")
    avals = np.append(aa.ravel(), 0.0)
    bvals = np.append(bb.ravel(), 0.0)
    vals = _kernels.quad_norms(c0, p_mat, q_mat, r_mat, avals, bvals, mode, p)
    j = int(np.argmin(vals))
    a0, b0 = float(avals[j]), float(bvals[j])
    fbest = float(vals[j])

    step = 2.0 * radius / max(grid - 1, 1)
    floor = 1e-12 * max(1.0, radius)
    dir_a = np.array([d[0] for d in _DIRS])
    dir_b = np.array([d[1] for d in _DIRS])
    for _ in range(200):
        tiny = 1e-13 * max(1.0, fbest)
        pv = _kernels.quad_norms(c0, p_mat, q_mat, r_mat,
                                 a0 + step * dir_a, b0 + step * dir_b,
                                 mode, p)
        k = int(np.argmin(pv))
        if pv[k] < fbest - tiny:
            ca, cb = _DIRS[k]
            t, f = _line_min(c0, p_mat, q_mat, r_mat, a0, b0, ca, cb,
                             2.0 * step, mode, p)
            if f < pv[k]:
                fbest = f
                a0 += t * ca
                b0 += t * cb
            else:
                fbest = float(pv[k])
                a0 += step * ca
                b0 += step * cb
            continue
        step *= 0.5
        if step < floor:
            break
    gamma = complex(a0, b0)
    value = norm_eval(spec, x + gamma * y)
    return value, gamma


def scalar_distance(a, spec: NormSpec, grid: int = GRID_DISK) -> ScalarDistance:
    """D_{N,A} = inf over lambda of N(A - lambda I), with a minimizing center."""
    a = as_matrix(a)
    n = a.shape[0]
    na = norm_eval(spec, a)
    if na == 0.0:
        return ScalarDistance(distance=0.0, center=0j)
    if spec.kind == "schatten" and spec.p == 2.0:
        # orthogonal projection onto the span of I
        center = trace_functional(a) / n
        return ScalarDistance(
            distance=hs_norm(a - center * np.eye(n)), center=center
        )
    value, gamma = min_over_disk(a, -np.eye(n, dtype=np.complex128), spec,
                                 radius=2.0 * na, grid=grid)
    if value > na:
        return ScalarDistance(distance=na, center=0j)
    return ScalarDistance(distance=value, center=gamma)
