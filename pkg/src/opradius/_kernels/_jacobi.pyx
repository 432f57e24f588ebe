# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Cyclic Jacobi eigenvalue kernels for small complex Hermitian matrices.

One complex rotation zeroes the pivot a[p,q]: the pivot's phase is absorbed
into the rotation so the 2x2 subproblem reduces to the classic real-symmetric
case.  Sweeps stop when the off-diagonal Frobenius mass drops below
1e-13 * ||H||_F; a matrix that fails to converge within 100 sweeps raises.

The rotation updates run on the interleaved (re, im) double layout of
complex128 so the inner loops stay free of complex-arithmetic library calls.
The module-level functions mirror opradius._kernels._fallback exactly.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, fabs, pow, sin, sqrt
from libc.string cimport memcpy

cnp.import_array()

ctypedef double complex cplx

cdef double _INVPHI = (sqrt(5.0) - 1.0) / 2.0

MAX_DIM = 32


cdef int _jacobi_core(cplx* a, cplx* v, int n, bint want_v) nogil:
    """Diagonalize Hermitian a (row-major, in place). Returns sweep count or -1."""
    cdef double* d = <double*>a
    cdef double* e = <double*>v
    cdef int i, j, k, p, q, sweep, kp, kq, pk, qk
    cdef double fro2 = 0.0, off2, thresh, rot_tol2, ab2, ab, tau, t, c, s
    cdef double apqr, apqi, wr, wi, xpr, xpi, xqr, xqi

    for i in range(2 * n * n):
        fro2 += d[i] * d[i]
    if want_v:
        for i in range(n):
            for j in range(n):
                e[2 * (i * n + j)] = 1.0 if i == j else 0.0
                e[2 * (i * n + j) + 1] = 0.0
    if fro2 == 0.0:
        return 0
    thresh = 1e-13 * sqrt(fro2)
    rot_tol2 = thresh * thresh / (4.0 * n * n)

    for sweep in range(101):
        off2 = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                kp = 2 * (i * n + j)
                off2 += d[kp] * d[kp] + d[kp + 1] * d[kp + 1]
        if 2.0 * off2 <= thresh * thresh:
            return sweep
        if sweep == 100:
            return -1
        for p in range(n - 1):
            for q in range(p + 1, n):
                kp = 2 * (p * n + q)
                apqr = d[kp]
                apqi = d[kp + 1]
                ab2 = apqr * apqr + apqi * apqi
                if ab2 <= rot_tol2:
                    continue
                ab = sqrt(ab2)
                tau = (d[2 * (q * n + q)] - d[2 * (p * n + p)]) / (2.0 * ab)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                # w = s * phase with phase = a[p,q] / |a[p,q]|
                wr = s * apqr / ab
                wi = s * apqi / ab
                # columns: A <- A J with J[p,p]=J[q,q]=c, J[p,q]=w,
                # J[q,p]=-conj(w); so col_p <- c col_p - conj(w) col_q,
                # col_q <- w col_p + c col_q
                for k in range(n):
                    kp = 2 * (k * n + p)
                    kq = 2 * (k * n + q)
                    xpr = d[kp]
                    xpi = d[kp + 1]
                    xqr = d[kq]
                    xqi = d[kq + 1]
                    d[kp] = c * xpr - (wr * xqr + wi * xqi)
                    d[kp + 1] = c * xpi - (wr * xqi - wi * xqr)
                    d[kq] = wr * xpr - wi * xpi + c * xqr
                    d[kq + 1] = wr * xpi + wi * xpr + c * xqi
                # rows: A <- J^H A; row_p <- c row_p - w row_q,
                # row_q <- conj(w) row_p + c row_q
                for k in range(n):
                    pk = 2 * (p * n + k)
                    qk = 2 * (q * n + k)
                    xpr = d[pk]
                    xpi = d[pk + 1]
                    xqr = d[qk]
                    xqi = d[qk + 1]
                    d[pk] = c * xpr - (wr * xqr - wi * xqi)
                    d[pk + 1] = c * xpi - (wr * xqi + wi * xqr)
                    d[qk] = (wr * xpr + wi * xpi) + c * xqr
                    d[qk + 1] = (wr * xpi - wi * xpr) + c * xqi
                kp = 2 * (p * n + q)
                kq = 2 * (q * n + p)
                d[kp] = 0.0
                d[kp + 1] = 0.0
                d[kq] = 0.0
                d[kq + 1] = 0.0
                d[2 * (p * n + p) + 1] = 0.0
                d[2 * (q * n + q) + 1] = 0.0
                if want_v:
                    for k in range(n):
                        kp = 2 * (k * n + p)
                        kq = 2 * (k * n + q)
                        xpr = e[kp]
                        xpi = e[kp + 1]
                        xqr = e[kq]
                        xqi = e[kq + 1]
                        e[kp] = c * xpr - (wr * xqr + wi * xqi)
                        e[kp + 1] = c * xpi - (wr * xqi - wi * xqr)
                        e[kq] = wr * xpr - wi * xpi + c * xqr
                        e[kq + 1] = wr * xpi + wi * xpr + c * xqi
    return -1


cdef void _extract_sorted(cplx* a, cplx* v, double* wout, cplx* vout,
                          int* idx, int n, bint want_v) nogil:
    cdef double* d = <double*>a
    cdef int i, j, k, tmp
    cdef double key
    for i in range(n):
        wout[i] = d[2 * (i * n + i)]
        idx[i] = i
    for i in range(1, n):
        key = wout[i]
        tmp = idx[i]
        j = i - 1
        while j >= 0 and wout[j] > key:
            wout[j + 1] = wout[j]
            idx[j + 1] = idx[j]
            j -= 1
        wout[j + 1] = key
        idx[j + 1] = tmp
    if want_v:
        for k in range(n):
            for i in range(n):
                vout[k * n + i] = v[k * n + idx[i]]


cdef double _norm_from_diag(cplx* a, int n, int mode, double p) nogil:
    """Norm of the diagonalized matrix from its (unsorted) diagonal."""
    cdef double* d = <double*>a
    cdef int i
    cdef double x, acc = 0.0, mx = -1e300
    for i in range(n):
        x = d[2 * (i * n + i)]
        if mode == 0:
            acc += pow(fabs(x), p)
        elif mode == 1:
            if fabs(x) > acc:
                acc = fabs(x)
        elif mode == 2:
            if x > 0.0:
                acc += pow(x, 0.5 * p)
        else:
            if x > mx:
                mx = x
    if mode == 0 or mode == 2:
        return pow(acc, 1.0 / p) if acc > 0.0 else 0.0
    if mode == 1:
        return acc
    return sqrt(mx) if mx > 0.0 else 0.0


cdef void _build_angle(cplx* dst, cplx* c0, cplx* pm, cplx* qm,
                       double cv, double sv, int nn) nogil:
    # real coefficients act componentwise on the interleaved layout
    cdef double* dd = <double*>dst
    cdef double* d0 = <double*>c0
    cdef double* dp = <double*>pm
    cdef double* dq = <double*>qm
    cdef int i
    for i in range(2 * nn):
        dd[i] = d0[i] + cv * dp[i] + sv * dq[i]


cdef void _build_quad(cplx* dst, cplx* c0, cplx* pm, cplx* qm, cplx* rm,
                      double av, double bv, int nn) nogil:
    cdef double* dd = <double*>dst
    cdef double* d0 = <double*>c0
    cdef double* dp = <double*>pm
    cdef double* dq = <double*>qm
    cdef double* dr = <double*>rm
    cdef double r2 = av * av + bv * bv
    cdef int i
    for i in range(2 * nn):
        dd[i] = d0[i] + av * dp[i] + bv * dq[i] + r2 * dr[i]


cdef double _angle_eval(cplx* wk, cplx* c0, cplx* pm, cplx* qm, double phi,
                        int n, int mode, double p, int* status) nogil:
    _build_angle(wk, c0, pm, qm, cos(phi), sin(phi), n * n)
    if _jacobi_core(wk, <cplx*>0, n, 0) < 0:
        status[0] = -1
    return _norm_from_diag(wk, n, mode, p)


cdef double _quad_eval(cplx* wk, cplx* c0, cplx* pm, cplx* qm, cplx* rm,
                       double av, double bv, int n, int mode, double p,
                       int* status) nogil:
    _build_quad(wk, c0, pm, qm, rm, av, bv, n * n)
    if _jacobi_core(wk, <cplx*>0, n, 0) < 0:
        status[0] = -1
    return _norm_from_diag(wk, n, mode, p)


def _as_cmat(m, int n=-1):
    arr = np.ascontiguousarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("expected a square matrix")
    if arr.shape[0] > MAX_DIM:
        raise ValueError(f"matrix dimension exceeds {MAX_DIM}")
    if n >= 0 and arr.shape[0] != n:
        raise ValueError("matrix dimensions do not agree")
    return arr


def eigvalsh_batch(a):
    arr = np.ascontiguousarray(a, dtype=np.complex128)
    single = arr.ndim == 2
    if single:
        arr = arr[None, :, :]
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
        raise ValueError("expected (n, n) or (m, n, n) input")
    if arr.shape[1] > MAX_DIM:
        raise ValueError(f"matrix dimension exceeds {MAX_DIM}")

    cdef Py_ssize_t m = arr.shape[0], t
    cdef int n = <int>arr.shape[1]
    w = np.empty((m, n), dtype=np.float64)
    work = np.empty((n, n), dtype=np.complex128)
    idx = np.empty(n, dtype=np.intc)
    cdef cplx[:, :, ::1] av = arr
    cdef double[:, ::1] wv = w
    cdef cplx[:, ::1] wk = work
    cdef int[::1] ix = idx
    cdef Py_ssize_t bad = -1
    with nogil:
        for t in range(m):
            memcpy(&wk[0, 0], &av[t, 0, 0], n * n * sizeof(cplx))
            if _jacobi_core(&wk[0, 0], <cplx*>0, n, 0) < 0:
                bad = t
                break
            _extract_sorted(&wk[0, 0], <cplx*>0, &wv[t, 0], <cplx*>0,
                            &ix[0], n, 0)
    if bad >= 0:
        raise RuntimeError(f"jacobi sweep cap hit on batch element {bad}")
    return w[0] if single else w


def eigh_batch(a):
    arr = np.ascontiguousarray(a, dtype=np.complex128)
    single = arr.ndim == 2
    if single:
        arr = arr[None, :, :]
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
        raise ValueError("expected (n, n) or (m, n, n) input")
    if arr.shape[1] > MAX_DIM:
        raise ValueError(f"matrix dimension exceeds {MAX_DIM}")

    cdef Py_ssize_t m = arr.shape[0], t
    cdef int n = <int>arr.shape[1]
    w = np.empty((m, n), dtype=np.float64)
    vout = np.empty((m, n, n), dtype=np.complex128)
    work = np.empty((n, n), dtype=np.complex128)
    vwork = np.empty((n, n), dtype=np.complex128)
    idx = np.empty(n, dtype=np.intc)
    cdef cplx[:, :, ::1] av = arr
    cdef double[:, ::1] wv = w
    cdef cplx[:, :, ::1] vv = vout
    cdef cplx[:, ::1] wk = work
    cdef cplx[:, ::1] vk = vwork
    cdef int[::1] ix = idx
    cdef Py_ssize_t bad = -1
    with nogil:
        for t in range(m):
            memcpy(&wk[0, 0], &av[t, 0, 0], n * n * sizeof(cplx))
            if _jacobi_core(&wk[0, 0], &vk[0, 0], n, 1) < 0:
                bad = t
                break
            _extract_sorted(&wk[0, 0], &vk[0, 0], &wv[t, 0], &vv[t, 0, 0],
                            &ix[0], n, 1)
    if bad >= 0:
        raise RuntimeError(f"jacobi sweep cap hit on batch element {bad}")
    if single:
        return w[0], vout[0]
    return w, vout


def angle_norms(c0, p_mat, q_mat, cs, sn, int mode, double p):
    c0a = _as_cmat(c0)
    cdef int n = <int>c0a.shape[0]
    pa = _as_cmat(p_mat, n)
    qa = _as_cmat(q_mat, n)
    csa = np.ascontiguousarray(cs, dtype=np.float64).ravel()
    sna = np.ascontiguousarray(sn, dtype=np.float64).ravel()
    if csa.shape[0] != sna.shape[0]:
        raise ValueError("cs and sn must have the same length")

    cdef Py_ssize_t m = csa.shape[0], j
    out = np.empty(m, dtype=np.float64)
    work = np.empty((n, n), dtype=np.complex128)
    cdef cplx[:, ::1] c0v = c0a, pv = pa, qv = qa, wk = work
    cdef double[::1] cv = csa, sv = sna, ov = out
    cdef Py_ssize_t bad = -1
    with nogil:
        for j in range(m):
            _build_angle(&wk[0, 0], &c0v[0, 0], &pv[0, 0], &qv[0, 0],
                         cv[j], sv[j], n * n)
            if _jacobi_core(&wk[0, 0], <cplx*>0, n, 0) < 0:
                bad = j
                break
            ov[j] = _norm_from_diag(&wk[0, 0], n, mode, p)
    if bad >= 0:
        raise RuntimeError(f"jacobi sweep cap hit on batch element {bad}")
    return out


def angle_golden(c0, p_mat, q_mat, double lo, double hi, int mode, double p,
                 double tol=1e-12, int maxit=200):
    c0a = _as_cmat(c0)
    cdef int n = <int>c0a.shape[0]
    pa = _as_cmat(p_mat, n)
    qa = _as_cmat(q_mat, n)
    work = np.empty((n, n), dtype=np.complex128)
    cdef cplx[:, ::1] c0v = c0a, pv = pa, qv = qa, wk = work
    cdef int status = 0, it = 0
    cdef double x1, x2, f1, f2, xm, fm, bx, bf
    with nogil:
        x1 = hi - _INVPHI * (hi - lo)
        x2 = lo + _INVPHI * (hi - lo)
        f1 = _angle_eval(&wk[0, 0], &c0v[0, 0], &pv[0, 0], &qv[0, 0], x1,
                         n, mode, p, &status)
        f2 = _angle_eval(&wk[0, 0], &c0v[0, 0], &pv[0, 0], &qv[0, 0], x2,
                         n, mode, p, &status)
        while hi - lo > tol and it < maxit:
            if f1 < f2:
                lo = x1
                x1 = x2
                f1 = f2
                x2 = lo + _INVPHI * (hi - lo)
                f2 = _angle_eval(&wk[0, 0], &c0v[0, 0], &pv[0, 0], &qv[0, 0],
                                 x2, n, mode, p, &status)
            else:
                hi = x2
                x2 = x1
                f2 = f1
                x1 = hi - _INVPHI * (hi - lo)
                f1 = _angle_eval(&wk[0, 0], &c0v[0, 0], &pv[0, 0], &qv[0, 0],
                                 x1, n, mode, p, &status)
            it += 1
        xm = 0.5 * (lo + hi)
        fm = _angle_eval(&wk[0, 0], &c0v[0, 0], &pv[0, 0], &qv[0, 0], xm,
                         n, mode, p, &status)
        bx = x1
        bf = f1
        if f2 > bf:
            bx = x2
            bf = f2
        if fm > bf:
            bx = xm
            bf = fm
    if status < 0:
        raise RuntimeError("jacobi sweep cap hit during golden refinement")
    return bx, bf


def quad_norms(c0, p_mat, q_mat, r_mat, avals, bvals, int mode, double p):
    c0a = _as_cmat(c0)
    cdef int n = <int>c0a.shape[0]
    pa = _as_cmat(p_mat, n)
    qa = _as_cmat(q_mat, n)
    ra = _as_cmat(r_mat, n)
    aa = np.ascontiguousarray(avals, dtype=np.float64).ravel()
    ba = np.ascontiguousarray(bvals, dtype=np.float64).ravel()
    if aa.shape[0] != ba.shape[0]:
        raise ValueError("avals and bvals must have the same length")

    cdef Py_ssize_t m = aa.shape[0], j
    out = np.empty(m, dtype=np.float64)
    work = np.empty((n, n), dtype=np.complex128)
    cdef cplx[:, ::1] c0v = c0a, pv = pa, qv = qa, rv = ra, wk = work
    cdef double[::1] av_ = aa, bv_ = ba, ov = out
    cdef Py_ssize_t bad = -1
    with nogil:
        for j in range(m):
            _build_quad(&wk[0, 0], &c0v[0, 0], &pv[0, 0], &qv[0, 0],
                        &rv[0, 0], av_[j], bv_[j], n * n)
            if _jacobi_core(&wk[0, 0], <cplx*>0, n, 0) < 0:
                bad = j
                break
            ov[j] = _norm_from_diag(&wk[0, 0], n, mode, p)
    if bad >= 0:
        raise RuntimeError(f"jacobi sweep cap hit on batch element {bad}")
    return out


def quad_golden_axis(c0, p_mat, q_mat, r_mat, double a0, double b0, int axis,
                     double lo, double hi, int mode, double p,
                     double tol=1e-12, int maxit=200):
    c0a = _as_cmat(c0)
    cdef int n = <int>c0a.shape[0]
    pa = _as_cmat(p_mat, n)
    qa = _as_cmat(q_mat, n)
    ra = _as_cmat(r_mat, n)
    work = np.empty((n, n), dtype=np.complex128)
    cdef cplx[:, ::1] c0v = c0a, pv = pa, qv = qa, rv = ra, wk = work
    cdef int status = 0, it = 0
    cdef double x1, x2, f1, f2, xm, fm, bx, bf
    cdef double av1, bv1, av2, bv2
    with nogil:
        x1 = hi - _INVPHI * (hi - lo)
        x2 = lo + _INVPHI * (hi - lo)
        if axis == 0:
            av1 = x1
            bv1 = b0
            av2 = x2
            bv2 = b0
        else:
            av1 = a0
            bv1 = x1
            av2 = a0
            bv2 = x2
        f1 = _quad_eval(&wk[0, 0], &c0v[0, 0], &pv[0, 0], &qv[0, 0],
                        &rv[0, 0], av1, bv1, n, mode, p, &status)
        f2 = _quad_eval(&wk[0, 0], &c0v[0, 0], &pv[0, 0], &qv[0, 0],
                        &rv[0, 0], av2, bv2, n, mode, p, &status)
        while hi - lo > tol and it < maxit:
            if f1 > f2:
                lo = x1
                x1 = x2
                f1 = f2
                x2 = lo + _INVPHI * (hi - lo)
                if axis == 0:
                    f2 = _quad_eval(&wk[0, 0], &c0v[0, 0], &pv[0, 0],
                                    &qv[0, 0], &rv[0, 0], x2, b0, n, mode, p,
                                    &status)
                else:
                    f2 = _quad_eval(&wk[0, 0], &c0v[0, 0], &pv[0, 0],
                                    &qv[0, 0], &rv[0, 0], a0, x2, n, mode, p,
                                    &status)
            else:
                hi = x2
                x2 = x1
                f2 = f1
                x1 = hi - _INVPHI * (hi - lo)
                if axis == 0:
                    f1 = _quad_eval(&wk[0, 0], &c0v[0, 0], &pv[0, 0],
                                    &qv[0, 0], &rv[0, 0], x1, b0, n, mode, p,
                                    &status)
                else:
                    f1 = _quad_eval(&wk[0, 0], &c0v[0, 0], &pv[0, 0],
                                    &qv[0, 0], &rv[0, 0], a0, x1, n, mode, p,
                                    &status)
            it += 1
        xm = 0.5 * (lo + hi)
        if axis == 0:
            fm = _quad_eval(&wk[0, 0], &c0v[0, 0], &pv[0, 0], &qv[0, 0],
                            &rv[0, 0], xm, b0, n, mode, p, &status)
        else:
            fm = _quad_eval(&wk[0, 0], &c0v[0, 0], &pv[0, 0], &qv[0, 0],
                            &rv[0, 0], a0, xm, n, mode, p, &status)
        bx = x1
        bf = f1
        if f2 < bf:
            bx = x2
            bf = f2
        if fm < bf:
            bx = xm
            bf = fm
    if status < 0:
        raise RuntimeError("jacobi sweep cap hit during golden refinement")
    return bx, bf
