"""Backend selection for the Hermitian eigenvalue kernels.

Everything hot in this package reduces to eigenvalues of small Hermitian
matrices swept over one- or two-parameter families.  Two backends implement
the same contract: a compiled cyclic Jacobi kernel and a NumPy fallback.
When the extension built, calls are dispatched by matrix size: the Jacobi
kernel wins on small dimensions and on sequential golden-section refinement
(no per-call LAPACK/Python overhead), while batched LAPACK wins on larger
matrices.  Cutovers below come from benchmarks/bench_kernels.py on the build
machine.  Set OPRADIUS_BACKEND=python to force the fallback everywhere.

Family conventions shared by both backends:

    angle family   M(j)    = C0 + cs[j]*P + sn[j]*Q
    quad family    M(a,b)  = C0 + a*P + b*Q + (a*a + b*b)*R

with C0, P, Q, R Hermitian.  Norms are evaluated from eigenvalues only:

    mode 0   (sum |w_i|^p)^(1/p)        Schatten norm of a Hermitian matrix
    mode 1   max |w_i|                  operator norm of a Hermitian matrix
    mode 2   (sum max(w_i,0)^(p/2))^(1/p)   Schatten norm from a Gram matrix
    mode 3   sqrt(max(w_max, 0))        operator norm from a Gram matrix
"""

import os

import numpy as np

from . import _fallback

MODE_HERM_SCHATTEN = 0
MODE_HERM_OPERATOR = 1
MODE_GRAM_SCHATTEN = 2
MODE_GRAM_OPERATOR = 3

# largest dimension routed to the compiled kernel, per code path
_GRID_CUTOVER = 5
_GOLDEN_CUTOVER = 9

if os.environ.get("OPRADIUS_BACKEND", "").lower() == "python":
    _compiled = None
    BACKEND = "python"
else:
    try:
        from . import _jacobi as _compiled

        BACKEND = "compiled"
    except ImportError:
        _compiled = None
        BACKEND = "python"

if _compiled is None:
    eigvalsh_batch = _fallback.eigvalsh_batch
    eigh_batch = _fallback.eigh_batch
    angle_norms = _fallback.angle_norms
    angle_golden = _fallback.angle_golden
    quad_norms = _fallback.quad_norms
    quad_golden_axis = _fallback.quad_golden_axis
else:

    def eigvalsh_batch(a):
        n = np.asarray(a).shape[-1]
        impl = _compiled if n <= _GRID_CUTOVER else _fallback
        return impl.eigvalsh_batch(a)

    def eigh_batch(a):
        n = np.asarray(a).shape[-1]
        impl = _compiled if n <= _GRID_CUTOVER else _fallback
        return impl.eigh_batch(a)

    def angle_norms(c0, p_mat, q_mat, cs, sn, mode, p):
        impl = _compiled if np.asarray(c0).shape[0] <= _GRID_CUTOVER else _fallback
        return impl.angle_norms(c0, p_mat, q_mat, cs, sn, mode, p)

    def angle_golden(c0, p_mat, q_mat, lo, hi, mode, p, tol=1e-12, maxit=200):
        impl = _compiled if np.asarray(c0).shape[0] <= _GOLDEN_CUTOVER else _fallback
        return impl.angle_golden(c0, p_mat, q_mat, lo, hi, mode, p, tol, maxit)

    def quad_norms(c0, p_mat, q_mat, r_mat, avals, bvals, mode, p):
        impl = _compiled if np.asarray(c0).shape[0] <= _GRID_CUTOVER else _fallback
        return impl.quad_norms(c0, p_mat, q_mat, r_mat, avals, bvals, mode, p)

    def quad_golden_axis(c0, p_mat, q_mat, r_mat, a0, b0, axis, lo, hi, mode,
                         p, tol=1e-12, maxit=200):
        impl = _compiled if np.asarray(c0).shape[0] <= _GOLDEN_CUTOVER else _fallback
        return impl.quad_golden_axis(c0, p_mat, q_mat, r_mat, a0, b0, axis,
                                     lo, hi, mode, p, tol, maxit)
