"""Complex matrix values, Cartesian decomposition, and seeded random ensembles.

Matrices are plain complex128 ndarrays, validated square, finite, and of
dimension at most 32.  Sampling is counter-based: every (kind, dim, seed,
trial) tuple is hashed to an independent Philox stream, so any trial of any
ensemble reproduces bitwise without replaying the stream before it.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

import numpy as np

MAX_DIM = 32

KINDS = (
    "ginibre",
    "hermitian",
    "psd",
    "normal",
    "nilpotent",
    "square_zero",
    "rank_one",
    "accretive",
    "accretive_dissipative",
    "selfadjoint_product_pair",
    "commuting_star_pair",
)

PAIR_KINDS = ("selfadjoint_product_pair", "commuting_star_pair")


class MatrixFormatError(ValueError):
    """Raised when matrix input (JSON or array-like) is malformed."""


def as_matrix(a) -> np.ndarray:
    """Coerce to a validated square complex128 C-contiguous matrix."""
    arr = np.ascontiguousarray(a, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise MatrixFormatError("expected a square matrix")
    if not 1 <= arr.shape[0] <= MAX_DIM:
        raise MatrixFormatError(f"dimension must be in [1, {MAX_DIM}]")
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise MatrixFormatError("matrix entries must be finite")
    return arr


def as_vector(x) -> np.ndarray:
    arr = np.ascontiguousarray(x, dtype=np.complex128)
    if arr.ndim != 1 or not 1 <= arr.shape[0] <= MAX_DIM:
        raise MatrixFormatError(f"expected a vector of length in [1, {MAX_DIM}]")
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise MatrixFormatError("vector entries must be finite")
    return arr


def cartesian_parts(a) -> tuple[np.ndarray, np.ndarray]:
    """Return (H, K) with A = H + iK, both Hermitian."""
    a = as_matrix(a)
    h = (a + a.conj().T) / 2
    k = (a - a.conj().T) / 2j
    return h, k


def re_part(a) -> np.ndarray:
    return cartesian_parts(a)[0]


def im_part(a) -> np.ndarray:
    return cartesian_parts(a)[1]


def rotate(a, theta: float) -> np.ndarray:
    """Multiply by the unimodular scalar e^(i*theta)."""
    return as_matrix(a) * np.exp(1j * float(theta))


def rank_one(x, y) -> np.ndarray:
    """The map z -> <z, y> x, as the matrix x y*."""
    x = as_vector(x)
    y = as_vector(y)
    if x.shape[0] != y.shape[0]:
        raise ValueError("vectors must have the same length")
    return np.outer(x, y.conj())


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt inner product tr(B* A)."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ValueError("matrices must have the same dimension")
    return complex(np.vdot(b, a))


def hs_norm(a) -> float:
    """Frobenius norm, the square root of hs_inner(A, A)."""
    return float(np.linalg.norm(as_matrix(a)))


@dataclass(frozen=True)
class EnsembleSpec:
    kind: str
    dim: int
    seed: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown ensemble kind {self.kind!r}")
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dim must be in [1, {MAX_DIM}]")


def parse_ensemble(text: str) -> EnsembleSpec:
    """Parse the kind:dim:seed form used on the command line."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("ensemble spec must look like kind:dim:seed")
    kind, dim_s, seed_s = parts
    try:
        dim = int(dim_s)
        seed = int(seed_s)
    except ValueError as exc:
        raise ValueError("ensemble dim and seed must be integers") from exc
    return EnsembleSpec(kind=kind, dim=dim, seed=seed)


def label_generator(label: str) -> np.random.Generator:
    """Philox stream keyed by the SHA-256 of a text label."""
    digest = hashlib.sha256(label.encode("utf-8")).digest()
    key = int.from_bytes(digest[:16], "little")
    return np.random.Generator(np.random.Philox(key=key))


def complex_gaussians(gen: np.random.Generator, shape) -> np.ndarray:
    """Standard complex Gaussians (E|z|^2 = 1) via Box-Muller on uniforms."""
    u1 = gen.random(shape)
    u2 = gen.random(shape)
    # 1 - u1 lies in (0, 1], keeping the log finite
    r = np.sqrt(-2.0 * np.log1p(-u1))
    t = 2.0 * np.pi * u2
    return (r * np.cos(t) + 1j * r * np.sin(t)) / np.sqrt(2.0)


def real_gaussians(gen: np.random.Generator, shape) -> np.ndarray:
    """Standard real Gaussians via the same Box-Muller scheme."""
    u1 = gen.random(shape)
    u2 = gen.random(shape)
    return np.sqrt(-2.0 * np.log1p(-u1)) * np.cos(2.0 * np.pi * u2)


def _haar_unitary(gen: np.random.Generator, n: int) -> np.ndarray:
    g = complex_gaussians(gen, (n, n))
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def _ginibre(gen, n):
    return complex_gaussians(gen, (n, n)) / np.sqrt(n)


def _sample_one(kind: str, n: int, gen: np.random.Generator):
    if kind == "ginibre":
        return _ginibre(gen, n)
    if kind == "hermitian":
        g = _ginibre(gen, n)
        return (g + g.conj().T) / 2
    if kind == "psd":
        b = _ginibre(gen, n)
        w = b @ b.conj().T
        return (w + w.conj().T) / 2
    if kind == "normal":
        u = _haar_unitary(gen, n)
        eig = complex_gaussians(gen, n)
        return u @ np.diag(eig) @ u.conj().T
    if kind == "nilpotent":
        a = complex_gaussians(gen, (n, n))
        return np.triu(a, k=1)
    if kind == "square_zero":
        if n < 2:
            raise ValueError("square_zero requires dim >= 2")
        k = n // 2
        a = np.zeros((n, n), dtype=np.complex128)
        a[:k, k:] = complex_gaussians(gen, (k, n - k))
        return a
    if kind == "rank_one":
        x = complex_gaussians(gen, n)
        y = complex_gaussians(gen, n)
        return np.outer(x, y.conj())
    if kind == "accretive":
        b = _ginibre(gen, n)
        p = b @ b.conj().T
        k = _ginibre(gen, n)
        return (p + p.conj().T) / 2 + 1j * (k + k.conj().T) / 2
    if kind == "accretive_dissipative":
        b = _ginibre(gen, n)
        c = _ginibre(gen, n)
        p = b @ b.conj().T
        q = c @ c.conj().T
        return (p + p.conj().T) / 2 + 1j * (q + q.conj().T) / 2
    raise ValueError(f"unknown ensemble kind {kind!r}")


def _sample_selfadjoint_product(n, gen):
    # A kept well conditioned so B = A^{-1} H keeps AB Hermitian to rounding
    for _ in range(100):
        a = _ginibre(gen, n)
        s = np.linalg.svd(a, compute_uv=False)
        if s[-1] > s[0] / 50.0:
            break
    else:
        raise RuntimeError("failed to draw a well-conditioned factor")
    g = _ginibre(gen, n)
    h = (g + g.conj().T) / 2
    b = np.linalg.solve(a, h)
    return a, b


def _sample_commuting_star(n, gen):
    if n < 3:
        raise ValueError("commuting_star_pair requires dim >= 3")
    # 3x3 block satisfying A X = X A* exactly, padded and unitarily conjugated
    a = np.eye(n, dtype=np.complex128)
    a[1, 0] = 1.0
    x = np.zeros((n, n), dtype=np.complex128)
    diag = real_gaussians(gen, n)
    diag[0] = 0.0
    np.fill_diagonal(x, diag)
    alpha = float(real_gaussians(gen, ()))
    while abs(alpha) < 1e-3:
        alpha = float(real_gaussians(gen, ()))
    a = alpha * a
    u = _haar_unitary(gen, n)
    return u @ a @ u.conj().T, u @ x @ u.conj().T


def sample(spec: EnsembleSpec, trial: int = 0):
    """Draw the given trial of an ensemble; pure in (spec, trial)."""
    label = f"{spec.kind}:{spec.dim}:{spec.seed}:{trial}"
    gen = label_generator(label)
    if spec.kind == "selfadjoint_product_pair":
        return _sample_selfadjoint_product(spec.dim, gen)
    if spec.kind == "commuting_star_pair":
        return _sample_commuting_star(spec.dim, gen)
    return _sample_one(spec.kind, spec.dim, gen)


def matrix_to_json(a) -> dict:
    a = as_matrix(a)
    return {
        "dim": int(a.shape[0]),
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in a],
    }


def matrix_from_json(obj) -> np.ndarray:
    if not isinstance(obj, dict) or "dim" not in obj or "entries" not in obj:
        raise MatrixFormatError("matrix JSON must have 'dim' and 'entries'")
    dim = obj["dim"]
    entries = obj["entries"]
    if not isinstance(dim, int) or not 1 <= dim <= MAX_DIM:
        raise MatrixFormatError(f"dim must be an integer in [1, {MAX_DIM}]")
    if not isinstance(entries, list) or len(entries) != dim:
        raise MatrixFormatError("entries must be a dim x dim array")
    out = np.empty((dim, dim), dtype=np.complex128)
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != dim:
            raise MatrixFormatError("entries must be a dim x dim array")
        for j, cell in enumerate(row):
            if (
                not isinstance(cell, list)
                or len(cell) != 2
                or not all(isinstance(v, (int, float)) for v in cell)
            ):
                raise MatrixFormatError("each entry must be a [re, im] pair")
            out[i, j] = complex(cell[0], cell[1])
    return as_matrix(out)


def read_matrix(path: str) -> np.ndarray:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"{path} is not valid JSON: {exc}") from exc
    return matrix_from_json(obj)
