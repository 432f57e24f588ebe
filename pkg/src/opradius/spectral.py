"""Spectral machinery: Hermitian eigendecomposition, SVD, polar form, Aluthge.

hermitian_eig routes through the kernel backends (compiled Jacobi on small
matrices).  svd and polar sit on LAPACK: forming A*A would square the
condition number and leave noise singular values of order sqrt(eps)*s_max,
which cannot meet the reconstruction and partial-isometry contracts below
for rank-deficient inputs.  Rank decisions use the cutoff
s_i <= 1e-12 * n * s_max.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .complexmat import as_matrix


@dataclass(frozen=True)
class HermEig:
    """Eigenvalues (descending) and a unitary whose columns are eigenvectors."""

    eigenvalues: np.ndarray
    basis: np.ndarray


@dataclass(frozen=True)
class SvdParts:
    """A = left @ diag(singulars) @ right*; singulars descending, >= 0."""

    left: np.ndarray
    singulars: np.ndarray
    right: np.ndarray


@dataclass(frozen=True)
class PolarParts:
    """A = isometry_part @ modulus with the canonical partial isometry."""

    isometry_part: np.ndarray
    modulus: np.ndarray


def hermitian_eig(h) -> HermEig:
    h = as_matrix(h)
    herm_defect = np.linalg.norm(h - h.conj().T)
    if herm_defect > 1e-10 * max(np.linalg.norm(h), 1e-300):
        raise ValueError("input is not Hermitian")
    sym = (h + h.conj().T) / 2
    w, v = _kernels.eigh_batch(sym)
    return HermEig(eigenvalues=w[::-1].copy(), basis=np.ascontiguousarray(v[:, ::-1]))


def svd(a) -> SvdParts:
    a = as_matrix(a)
    u, s, vh = np.linalg.svd(a)
    return SvdParts(left=u, singulars=s, right=np.ascontiguousarray(vh.conj().T))


def singular_values(a) -> np.ndarray:
    """Singular values only, descending."""
    return np.linalg.svd(as_matrix(a), compute_uv=False)


def rank_cutoff(s: np.ndarray, n: int) -> float:
    return 1e-12 * n * (s[0] if len(s) else 0.0)


def polar(a) -> PolarParts:
    a = as_matrix(a)
    n = a.shape[0]
    u, s, vh = np.linalg.svd(a)
    r = int(np.sum(s > rank_cutoff(s, n)))
    iso = u[:, :r] @ vh[:r, :]
    modulus = (vh.conj().T * s) @ vh
    modulus = (modulus + modulus.conj().T) / 2
    return PolarParts(isometry_part=iso, modulus=modulus)


def psd_sqrt(p) -> np.ndarray:
    """Square root of a PSD matrix; small negative drift is clamped."""
    p = as_matrix(p)
    w, v = _kernels.eigh_batch((p + p.conj().T) / 2)
    lam_max = float(w[-1]) if w[-1] > 0 else 0.0
    if w[0] < -1e-11 * max(lam_max, 1e-300):
        raise ValueError("matrix is not positive semidefinite")
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    return (root + root.conj().T) / 2


def psd_power(p, alpha: float) -> np.ndarray:
    """Elementwise spectral power of a PSD matrix, for alpha > 0."""
    p = as_matrix(p)
    w, v = _kernels.eigh_batch((p + p.conj().T) / 2)
    lam_max = float(w[-1]) if w[-1] > 0 else 0.0
    if w[0] < -1e-11 * max(lam_max, 1e-300):
        raise ValueError("matrix is not positive semidefinite")
    powed = (v * np.clip(w, 0.0, None) ** alpha) @ v.conj().T
    return (powed + powed.conj().T) / 2


def aluthge(a) -> np.ndarray:
    """|A|^(1/2) U |A|^(1/2) with U the canonical partial isometry."""
    a = as_matrix(a)
    n = a.shape[0]
    u, s, vh = np.linalg.svd(a)
    r = int(np.sum(s > rank_cutoff(s, n)))
    iso = u[:, :r] @ vh[:r, :]
    half = (vh.conj().T * np.sqrt(s)) @ vh
    return half @ iso @ half
