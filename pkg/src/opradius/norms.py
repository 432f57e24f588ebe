"""The supported norm family (operator and Schatten-p) and the trace functional.

Every norm here is selfadjoint, unitarily invariant, and submultiplicative,
which is what the radius and verification layers rely on.  Schatten p < 1 is
rejected: the triangle inequality fails there.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .complexmat import as_matrix
from .spectral import singular_values


@dataclass(frozen=True)
class NormSpec:
    kind: str
    p: float | None = None
    selfadjoint: bool = field(default=True, init=False)
    unitarily_invariant: bool = field(default=True, init=False)

    def __post_init__(self):
        if self.kind == "operator":
            if self.p is not None:
                raise ValueError("operator norm takes no p")
        elif self.kind == "schatten":
            if self.p is None or not np.isfinite(self.p) or self.p < 1:
                raise ValueError("schatten norm requires finite p >= 1")
            object.__setattr__(self, "p", float(self.p))
        else:
            raise ValueError(f"unknown norm kind {self.kind!r}")

    @property
    def label(self) -> str:
        return "op" if self.kind == "operator" else f"p:{self.p:g}"


OPERATOR = NormSpec("operator")


def schatten(p: float) -> NormSpec:
    return NormSpec("schatten", p)


def parse_norm(text: str) -> NormSpec:
    """Parse the CLI norm syntax: "op" or "p:<float>"."""
    if text == "op":
        return OPERATOR
    if text.startswith("p:"):
        try:
            p = float(text[2:])
        except ValueError as exc:
            raise ValueError(f"bad norm spec {text!r}") from exc
        return schatten(p)
    raise ValueError(f"bad norm spec {text!r} (expected 'op' or 'p:<float>')")


def norm_from_singulars(spec: NormSpec, s: np.ndarray) -> float:
    if spec.kind == "operator":
        return float(s[0]) if len(s) else 0.0
    acc = float(np.sum(s**spec.p))
    return acc ** (1.0 / spec.p) if acc > 0.0 else 0.0


def norm_eval(spec: NormSpec, a) -> float:
    """N(A) for the given norm."""
    return norm_from_singulars(spec, singular_values(a))


def trace_functional(a) -> complex:
    """Sum of diagonal entries."""
    return complex(np.trace(as_matrix(a)))
