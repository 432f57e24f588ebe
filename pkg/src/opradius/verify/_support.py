"""Shared plumbing for the check registry: seeded draws, constructed
samples, norming functionals, and the report accumulator."""

from __future__ import annotations

import hashlib

import numpy as np

from .. import complexmat as cm
from .. import spectral
from ..norms import NormSpec, norm_eval

MAX_REDRAWS = 80


def subseed(*parts) -> int:
    """Stable 63-bit seed from a pipe-joined label."""
    text = "|".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little") & ((1 << 63) - 1)


def draw_matrix(check_id: str, kind: str, dim: int, seed: int, trial: int,
                role: str = "", redraw: int = 0) -> np.ndarray:
    spec = cm.EnsembleSpec(
        kind=kind, dim=dim, seed=subseed(check_id, role, redraw, seed)
    )
    return cm.sample(spec, trial=trial)


def draw_generator(check_id: str, dim: int, seed: int, trial: int,
                   role: str, redraw: int = 0):
    label = f"{check_id}:{role}:{dim}:{subseed(check_id, role, redraw, seed)}:{trial}"
    return cm.label_generator(label)


def draw_vectors(check_id: str, dim: int, count: int, seed: int, trial: int,
                 role: str = "vec", redraw: int = 0) -> np.ndarray:
    """(dim, count) column vectors of iid standard complex Gaussians."""
    gen = draw_generator(check_id, dim, seed, trial, role, redraw)
    return cm.complex_gaussians(gen, dim * count).reshape(dim, count)


def draw_phase(check_id: str, dim: int, seed: int, trial: int,
               role: str = "psi", redraw: int = 0) -> float:
    gen = draw_generator(check_id, dim, seed, trial, role, redraw)
    return float(gen.random() * 2.0 * np.pi)


def hermitian_phase(check_id: str, dim: int, seed: int, trial: int,
                    redraw: int = 0):
    """A = e^(i psi) H with H Hermitian: then A = e^(2i psi) A*, so A is
    parallel to its adjoint and attains w_N(A) = N(A) for selfadjoint N."""
    h = draw_matrix(check_id, "hermitian", dim, seed, trial, "herm", redraw)
    psi = draw_phase(check_id, dim, seed, trial, "psi", redraw)
    return np.exp(1j * psi) * h, psi, h


def traceless_square_normal(check_id: str, dim: int, seed: int, trial: int,
                            redraw: int = 0) -> np.ndarray:
    """Normal matrix with tr(A^2) = 0: eigenvalues drawn, the last one
    fixed to cancel the sum of squares, basis Haar."""
    gen = draw_generator(check_id, dim, seed, trial, "tless", redraw)
    d = cm.complex_gaussians(gen, dim)
    if dim == 1:
        d[0] = 0.0
    else:
        d[-1] = 1j * np.sqrt(np.sum(d[:-1] ** 2))
    u = cm._haar_unitary(gen, dim)
    return u @ np.diag(d) @ u.conj().T


def herm_norming_functional(h: np.ndarray, spec: NormSpec) -> np.ndarray:
    """Hermitian G with tr(G H) = N(H) and |tr(G Z)| <= N(Z) for Hermitian Z.

    Dual-norm certificates: for the operator norm a rank-one projector at a
    peak eigenvalue; for Schatten p the |H|^(p-1) gradient; for p = 1 the
    full sign matrix.
    """
    eig = spectral.hermitian_eig(h)
    w, v = eig.eigenvalues, eig.basis
    if spec.kind == "operator":
        k = int(np.argmax(np.abs(w)))
        sgn = 1.0 if w[k] >= 0 else -1.0
        return sgn * np.outer(v[:, k], v[:, k].conj())
    p = spec.p
    sgn = np.where(w >= 0, 1.0, -1.0)
    if p == 1.0:
        return (v * sgn) @ v.conj().T
    nh = float((np.abs(w) ** p).sum() ** (1.0 / p))
    d = sgn * np.abs(w) ** (p - 1.0) / nh ** (p - 1.0)
    return (v * d) @ v.conj().T


def matrix_norming_functional(x: np.ndarray, spec: NormSpec) -> np.ndarray:
    """G with tr(G* X) = N(X) and |tr(G* Z)| <= N(Z) for all Z."""
    parts = spectral.svd(x)
    u, s, v = parts.left, parts.singulars, parts.right
    if spec.kind == "operator":
        return np.outer(u[:, 0], v[:, 0].conj())
    p = spec.p
    if p == 1.0:
        return u @ v.conj().T
    nx = float((s ** p).sum() ** (1.0 / p))
    return (u * (s / nx) ** (p - 1.0)) @ v.conj().T


def bj_partner(x: np.ndarray, b: np.ndarray, spec: NormSpec) -> np.ndarray:
    """A = B - (f(B)/N(X)) X for a norming functional f at X, so f(A) = 0
    and hence X is BJ-orthogonal to A in N."""
    g = matrix_norming_functional(x, spec)
    fb = complex(np.trace(g.conj().T @ b))
    return b - (fb / norm_eval(spec, x)) * x


def lambda_mesh(radius: float, k: int = 5) -> np.ndarray:
    """k x k complex grid on the square of the given radius, plus 0."""
    ax = np.linspace(-radius, radius, k)
    aa, bb = np.meshgrid(ax, ax, indexing="ij")
    return np.append(aa.ravel() + 1j * bb.ravel(), 0j)


class Accumulator:
    """Merge-only trial aggregator for one check."""

    def __init__(self, mode: str):
        self.mode = mode
        self.trials = 0
        self.violations = 0
        self.counterexamples = 0
        self.min_slack = np.inf
        self.max_ratio = -np.inf
        self._bad: list[dict] = []
        self._best: dict | None = None

    def record(self, slack: float, ratio: float | None = None,
               witness: dict | None = None, violated: bool | None = None):
        """One trial.  slack > 0 means healthy margin; violated defaults
        to slack < 0.  In scrutiny mode a 'violation' of the printed claim
        is counted as a counterexample instead."""
        self.trials += 1
        slack = float(slack)
        if violated is None:
            violated = slack < 0.0
        if slack < self.min_slack:
            self.min_slack = slack
        if ratio is not None and np.isfinite(ratio):
            if ratio > self.max_ratio:
                self.max_ratio = float(ratio)
                if not violated and witness is not None:
                    self._best = witness
        if violated:
            if self.mode == "scrutiny":
                self.counterexamples += 1
            else:
                self.violations += 1
            if witness is not None and len(self._bad) < 3:
                self._bad.append(witness)

    def summary(self):
        if self.mode == "scrutiny":
            ratio = self.counterexamples / self.trials if self.trials else 0.0
        elif self.max_ratio > -np.inf:
            ratio = min(max(self.max_ratio, 0.0), 1.0)
        elif self.mode == "equivalence" and self.trials:
            ratio = (self.trials - self.violations) / self.trials
        else:
            ratio = 1.0 if self.trials and not self.violations else 0.0
        witnesses = list(self._bad)
        if not witnesses and self._best is not None:
            witnesses = [self._best]
        slack = self.min_slack if np.isfinite(self.min_slack) else 0.0
        return {
            "trials_run": self.trials,
            "violations": self.violations,
            "counterexamples": self.counterexamples,
            "max_violation": float(slack),
            "sharpness_ratio": float(ratio),
            "witnesses": witnesses,
        }


def witness(**mats) -> dict:
    """Serialize named matrices (or 1-D vectors, stored as diagonals)."""
    out = {}
    for name, m in mats.items():
        m = np.asarray(m, dtype=np.complex128)
        if m.ndim == 1:
            m = np.diag(m)
        out[name] = cm.matrix_to_json(m)
    return out


class DeadBand(RuntimeError):
    """Raised when a sample must be re-drawn (inside a decision dead band)."""


def with_redraws(fn):
    """Run fn(redraw_index) until it stops raising DeadBand."""
    for k in range(MAX_REDRAWS):
        try:
            return fn(k)
        except DeadBand:
            continue
    raise RuntimeError("dead-band redraw budget exhausted")
