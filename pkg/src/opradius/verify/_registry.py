"""The property-check registry.

Each check asserts one published statement about generalized numerical
radii over seeded matrix ensembles.  Three modes:

  inequality   zero violations beyond a 1e-8 relative slack required
  equivalence  two-sided test; positives constructed to attain equality,
               negatives re-drawn out of the decision dead band
  scrutiny     statements the suite expects to falsify; counterexamples
               are the desired outcome and are reported, not failed

Anchors are the bare mathematical statements.  Trial counts are per
(dim, norm) cell; samples cycle through the check's ensembles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .. import complexmat as cm
from .. import spectral
from ..complexmat import cartesian_parts, hs_norm, rotate
from ..geometry import (
    _phase_min_fro,
    bj_orthogonal,
    parallel_witness,
    w1_parallel_conditions,
    wn_lambda_values,
)
from ..norms import OPERATOR, NormSpec, norm_eval, norm_from_singulars, parse_norm
from ..radius import (
    angle_sup_multi,
    radius_value,
    radius_values,
    scalar_distance,
    w2_closed,
    wn_bounds,
)
from ._support import (
    DeadBand,
    bj_partner,
    draw_matrix,
    draw_phase,
    draw_vectors,
    herm_norming_functional,
    hermitian_phase,
    lambda_mesh,
    traceless_square_normal,
    with_redraws,
    witness,
)

TAU_REL = 1e-8        # relative slack tolerance for inequality checks
TAU_PRED = 1e-7       # predicate decision scale, matches geometry
MARGIN = 10.0         # dead-band multiplier for equivalence gating

# reduced working grids inside checks; production defaults stay larger
G_RAD = 256
G_PAR = 512
G_DISK = 24
G_INNER = 96

ALLN = ("op", "p:1", "p:1.5", "p:2", "p:3", "p:5")
PGRID = ("p:1", "p:1.5", "p:2", "p:3", "p:5")


@dataclass(frozen=True)
class CheckSpec:
    """One registry check instantiated with run parameters."""

    id: str
    ensembles: tuple[str, ...]
    dims: tuple[int, ...]
    p_grid: tuple[str, ...]
    trials: int
    mode: str


@dataclass(frozen=True)
class CheckDef:
    id: str
    anchor: str
    mode: str
    ensembles: tuple[str, ...]
    allowed: tuple[str, ...]
    dims: tuple[int, ...]
    norms: tuple[str, ...]
    trials: int
    run: Callable
    norm_ok: Callable[[NormSpec], bool] = lambda s: True
    min_dim: int = 1


def _norm_specs(spec: CheckSpec) -> list[NormSpec]:
    return [parse_norm(lbl) for lbl in spec.p_grid]


def _ens_cycle(spec: CheckSpec, trial: int) -> str:
    return spec.ensembles[trial % len(spec.ensembles)]


def _rel(x: float, scale: float) -> float:
    return x / max(scale, 1e-300)


def _eq_slack(slack: float, bad: bool) -> float:
    """Signed slack for equivalence trials: disagreement counts -1."""
    return min(slack, -1.0) if bad else slack


# ---------------------------------------------------------------------------
# radius bounds and identities


def _run_eq_1_1(spec, seed, acc):
    """||A||/2 <= w(A) <= ||A|| for the operator norm."""
    for dim in spec.dims:
        for t in range(spec.trials):
            a = draw_matrix(spec.id, _ens_cycle(spec, t), dim, seed, t)
            na = norm_eval(OPERATOR, a)
            if na == 0.0:
                continue
            w = radius_value(a, OPERATOR, grid=G_RAD)
            slack = _rel(min(na - w, w - na / 2.0), na) + TAU_REL
            acc.record(slack, ratio=w / na, witness=witness(A=a))


def _run_yamazaki(spec, seed, acc):
    """The angle supremum dominates random quadratic forms |<Ax, x>|."""
    for dim in spec.dims:
        for t in range(spec.trials):
            a = draw_matrix(spec.id, "ginibre", dim, seed, t)
            na = norm_eval(OPERATOR, a)
            w = radius_value(a, OPERATOR, grid=G_RAD)
            vecs = draw_vectors(spec.id, dim, 200, seed, t)
            vecs = vecs / np.linalg.norm(vecs, axis=0, keepdims=True)
            quad = np.abs(np.einsum("it,ij,jt->t", vecs.conj(), a, vecs))
            qmax = float(quad.max())
            slack = _rel(min(na - w, w - na / 2.0, w - qmax), na) + TAU_REL
            acc.record(slack, ratio=qmax / w if w > 0 else None,
                       witness=witness(A=a))


def _run_thm_4_1(spec, seed, acc):
    """max(||A||_2/sqrt(2), (||A||_2 + |tr A^2|^(1/2))/2) <= w_2(A) <= ||A||_2."""
    for dim in spec.dims:
        for t in range(spec.trials):
            a = draw_matrix(spec.id, _ens_cycle(spec, t), dim, seed, t)
            n2 = hs_norm(a)
            if n2 == 0.0:
                continue
            w2 = w2_closed(a)
            lower = max(n2 / np.sqrt(2.0),
                        (n2 + np.sqrt(abs(np.trace(a @ a)))) / 2.0)
            slack = _rel(min(w2 - lower, n2 - w2), n2) + TAU_REL
            acc.record(slack, ratio=lower / w2, witness=witness(A=a))


def _run_p_equiv(spec, seed, acc):
    """2^(-1/p)||A||_p <= w_p <= ||A||_p for p <= 2 and
    2^(1/p-1)||A||_p <= w_p <= ||A||_p for p >= 2."""
    specs = _norm_specs(spec)
    for dim in spec.dims:
        for t in range(spec.trials):
            a = draw_matrix(spec.id, _ens_cycle(spec, t), dim, seed, t)
            if hs_norm(a) == 0.0:
                continue
            ws = radius_values(a, specs, grid=G_RAD)
            for ns, w in zip(specs, ws):
                lower, upper = wn_bounds(a, ns)
                slack = _rel(min(w - lower, upper - w), upper) + TAU_REL
                acc.record(slack, ratio=lower / w if w > 0 else None,
                           witness=witness(A=a))


def _run_w1_degenerate(spec, seed, acc):
    """w_1(T) = ||T||_1/2 forces T = 0: every nonzero sample must clear
    the half-norm floor by a strict margin."""
    p1 = parse_norm("p:1")
    for dim in spec.dims:
        for t in range(spec.trials):
            a = draw_matrix(spec.id, _ens_cycle(spec, t), dim, seed, t)
            n1 = norm_eval(p1, a)
            if n1 == 0.0:
                continue
            w1 = radius_value(a, p1, grid=G_RAD)
            slack = _rel(w1 - (0.5 + 1e-6) * n1, n1)
            acc.record(slack, ratio=0.5 * n1 / w1 if w1 > 0 else None,
                       witness=witness(T=a))


def _run_aluthge_trace(spec, seed, acc):
    """|tr(aluthge(A)^2)| = |tr(A^2)| for every square matrix."""
    for dim in spec.dims:
        for t in range(spec.trials):
            a = draw_matrix(spec.id, _ens_cycle(spec, t), dim, seed, t)
            at = spectral.aluthge(a)
            lhs = abs(np.trace(at @ at))
            rhs = abs(np.trace(a @ a))
            scale = max(1.0, rhs)
            slack = _rel(TAU_REL * scale - abs(lhs - rhs), scale)
            acc.record(slack, ratio=None, witness=witness(A=a))


def _run_bp_angle(which: str):
    """lemma-bp-1 and lemma-bp-2: alternative angle families recover w_N."""

    def run(spec, seed, acc):
        specs = _norm_specs(spec)
        for dim in spec.dims:
            for t in range(spec.trials):
                a = draw_matrix(spec.id, _ens_cycle(spec, t), dim, seed, t)
                if hs_norm(a) == 0.0:
                    continue
                h, k = cartesian_parts(a)
                ws = radius_values(a, specs, grid=G_RAD)
                if which == "im":
                    alt = angle_sup_multi(k, h, specs, grid=G_RAD)
                else:
                    alt = angle_sup_multi(h, k, specs, grid=G_RAD)
                for ns, w, other in zip(specs, ws, alt):
                    slack = _rel(TAU_REL * w - abs(other.value - w), w)
                    acc.record(slack, ratio=None, witness=witness(A=a))

    return run


def _run_bp_3(spec, seed, acc):
    """w_N(A) <= (N(A) + N(A*))/2."""
    specs = _norm_specs(spec)
    for dim in spec.dims:
        for t in range(spec.trials):
            a = draw_matrix(spec.id, _ens_cycle(spec, t), dim, seed, t)
            if hs_norm(a) == 0.0:
                continue
            ws = radius_values(a, specs, grid=G_RAD)
            for ns, w in zip(specs, ws):
                bound = (norm_eval(ns, a) + norm_eval(ns, a.conj().T)) / 2.0
                acc.record(_rel(bound - w, bound) + TAU_REL,
                           ratio=w / bound, witness=witness(A=a))


def _run_bp_4(spec, seed, acc):
    """w_N(AX +/- XA*) <= (N(A) + N(A*)) w_N(X)."""
    specs = _norm_specs(spec)
    for dim in spec.dims:
        for t in range(spec.trials):
            a = draw_matrix(spec.id, "ginibre", dim, seed, t, role="A")
            x = draw_matrix(spec.id, "ginibre", dim, seed, t, role="X")
            plus = a @ x + x @ a.conj().T
            minus = a @ x - x @ a.conj().T
            wp = radius_values(plus, specs, grid=G_RAD)
            wm = radius_values(minus, specs, grid=G_RAD)
            wx = radius_values(x, specs, grid=G_RAD)
            for j, ns in enumerate(specs):
                bound = (norm_eval(ns, a) + norm_eval(ns, a.conj().T)) * wx[j]
                slack = _rel(min(bound - wp[j], bound - wm[j]), bound)
                acc.record(slack + TAU_REL,
                           ratio=max(wp[j], wm[j]) / bound,
                           witness=witness(A=a, X=x))


def _run_bp_5(spec, seed, acc):
    """If w_N(A) = N(A)/2 then Re(e^(i theta) A) is norm-parallel to
    Im(e^(i theta) A) for every theta; premise attained on square-zero
    samples with the operator norm."""
    thetas = np.arange(8) * (np.pi / 8.0)
    for dim in spec.dims:
        for t in range(spec.trials):
            a = draw_matrix(spec.id, "square_zero", dim, seed, t)
            na = norm_eval(OPERATOR, a)
            if na == 0.0:
                continue
            w = radius_value(a, OPERATOR, grid=G_RAD)
            prem = _rel(TAU_PRED * na - abs(w - na / 2.0), na)
            acc.record(prem, ratio=None, witness=witness(A=a))
            for theta in thetas:
                r = rotate(a, theta)
                h, k = cartesian_parts(r)
                if min(norm_eval(OPERATOR, h), norm_eval(OPERATOR, k)) == 0.0:
                    continue
                pw = parallel_witness(h, k, OPERATOR, grid=G_PAR)
                scale = norm_eval(OPERATOR, h) + norm_eval(OPERATOR, k)
                slack = _rel(TAU_PRED * scale - pw.gap, scale)
                acc.record(slack, ratio=None, violated=not pw.is_parallel,
                           witness=witness(A=a, ReA=h, ImA=k))


def _run_bp_6_upper(spec, seed, acc):
    """w_N(aluthge(A)) <= N(|A|^(1/2))^2 w_N(U) for the polar factor U."""
    specs = _norm_specs(spec)
    for dim in spec.dims:
        for t in range(spec.trials):
            a = draw_matrix(spec.id, _ens_cycle(spec, t), dim, seed, t)
            if hs_norm(a) == 0.0:
                continue
            pol = spectral.polar(a)
            at = spectral.aluthge(a)
            s_half = np.sqrt(spectral.singular_values(a))
            w_at = radius_values(at, specs, grid=G_RAD)
            w_u = radius_values(pol.isometry_part, specs, grid=G_RAD)
            for j, ns in enumerate(specs):
                bound = norm_from_singulars(ns, s_half) ** 2 * w_u[j]
                acc.record(_rel(bound - w_at[j], bound) + TAU_REL,
                           ratio=w_at[j] / bound if bound > 0 else None,
                           witness=witness(A=a))


# ---------------------------------------------------------------------------
# Birkhoff-James implications with constructed premises


def _run_bjn_1(spec, seed, acc):
    """If w_N(T) = N(T) (N selfadjoint) and T is radius-orthogonal to A,
    then T is N-orthogonal to A.  T = e^(i psi) H attains the premise; A
    is built so that a norming functional at H annihilates it, which
    certifies radius-orthogonality exactly."""
    specs = _norm_specs(spec)
    for dim in spec.dims:
        for ns in specs:
            for t in range(spec.trials):
                tm, psi, h = hermitian_phase(spec.id, dim, seed, t)
                nt = norm_eval(ns, tm)
                if nt == 0.0:
                    continue
                b = draw_matrix(spec.id, "ginibre", dim, seed, t,
                                role=f"B:{ns.label}")
                g = herm_norming_functional(h, ns)
                a = b - (np.trace(g @ b) / norm_eval(ns, h)) * h
                if hs_norm(a) < 1e-12 * hs_norm(b):
                    continue
                # premise: the radius attains the norm
                wt = radius_value(tm, ns, grid=G_RAD)
                acc.record(_rel(TAU_PRED * nt - abs(wt - nt), nt),
                           ratio=None, witness=witness(T=tm, A=a))
                # spot-check the constructed radius-orthogonality
                wa = radius_value(a, ns, grid=G_RAD)
                mesh = lambda_mesh(2.0 * wt / max(wa, 1e-300))
                vals = wn_lambda_values(tm, a, mesh, ns, inner_grid=G_INNER)
                probe = _rel(float(vals.min()) - (wt - TAU_PRED * wt), wt)
                acc.record(probe, ratio=None, witness=witness(T=tm, A=a))
                # conclusion: orthogonality in the norm itself
                ow = bj_orthogonal(tm, a, ns, grid=G_DISK)
                slack = _rel(ow.min_value - (nt - TAU_PRED * nt), nt)
                acc.record(slack, ratio=None, violated=not ow.is_orthogonal,
                           witness=witness(T=tm, A=a))


def _run_bjn_2(spec, seed, acc):
    """If w_N(T) = N(T)/2 and T is N-orthogonal to A, then T is
    radius-orthogonal to A.  Square-zero T attains the premise under the
    operator norm; A is annihilated by a norming functional at T."""
    for dim in spec.dims:
        for t in range(spec.trials):
            tm = draw_matrix(spec.id, "square_zero", dim, seed, t)
            nt = norm_eval(OPERATOR, tm)
            if nt == 0.0:
                continue
            b = draw_matrix(spec.id, "ginibre", dim, seed, t, role="B")
            a = bj_partner(tm, b, OPERATOR)
            if hs_norm(a) < 1e-12 * hs_norm(b):
                continue
            wt = radius_value(tm, OPERATOR, grid=G_RAD)
            acc.record(_rel(TAU_PRED * nt - abs(wt - nt / 2.0), nt),
                       ratio=None, witness=witness(T=tm, A=a))
            ow = bj_orthogonal(tm, a, OPERATOR, grid=G_DISK)
            acc.record(_rel(ow.min_value - (nt - TAU_PRED * nt), nt),
                       ratio=None, violated=not ow.is_orthogonal,
                       witness=witness(T=tm, A=a))
            wa = radius_value(a, OPERATOR, grid=G_RAD)
            mesh = lambda_mesh(2.0 * wt / max(wa, 1e-300))
            vals = wn_lambda_values(tm, a, mesh, OPERATOR, inner_grid=G_INNER)
            probe = _rel(float(vals.min()) - (wt - TAU_PRED * wt), wt)
            acc.record(probe, ratio=None, witness=witness(T=tm, A=a))


# ---------------------------------------------------------------------------
# equality-attainment equivalences


def _run_w2_upper(spec, seed, acc):
    """w_2(A) = ||A||_2 iff A is Schatten-2 parallel to A*."""
    p2 = parse_norm("p:2")
    for dim in spec.dims:
        for t in range(spec.trials):
            positive = t % 2 == 0

            def one(redraw, t=t, dim=dim, positive=positive):
                if positive:
                    a, _, _ = hermitian_phase(spec.id, dim, seed, t, redraw)
                else:
                    a = draw_matrix(spec.id, "ginibre", dim, seed, t,
                                    role="neg", redraw=redraw)
                n2 = hs_norm(a)
                if n2 == 0.0:
                    raise DeadBand
                w2 = w2_closed(a)
                pw = parallel_witness(a, a.conj().T, p2)
                scale = 2.0 * n2
                lhs_res = abs(w2 - n2)
                if not positive and (lhs_res < MARGIN * TAU_PRED * n2
                                     or pw.gap < MARGIN * TAU_PRED * scale):
                    raise DeadBand
                lhs = lhs_res <= TAU_PRED * n2
                rhs = pw.is_parallel
                bad = lhs != rhs or (positive and not lhs)
                if positive:
                    slack = _rel(TAU_PRED * n2 - lhs_res, n2)
                else:
                    slack = _rel(min(lhs_res - MARGIN * TAU_PRED * n2,
                                     pw.gap - MARGIN * TAU_PRED * scale), n2)
                acc.record(_eq_slack(slack, bad), ratio=None,
                           violated=bad, witness=witness(A=a))

            with_redraws(one)


def _run_equiv_cota_inf(spec, seed, acc):
    """w_2(A) = ||A||_2/sqrt(2) iff the identity is Schatten-p
    Birkhoff-James orthogonal to A^2; positives alternate square-zero
    samples with traceless-square normals."""
    eye = None
    for dim in spec.dims:
        eye = np.eye(dim, dtype=np.complex128)
        for ns in _norm_specs(spec):
            for t in range(spec.trials):
                positive = t % 2 == 0

                def one(redraw, t=t, dim=dim, ns=ns, positive=positive):
                    if positive and t % 4 == 0:
                        a = draw_matrix(spec.id, "square_zero", dim, seed, t,
                                        role=f"pos:{ns.label}", redraw=redraw)
                    elif positive:
                        a = traceless_square_normal(
                            spec.id, dim, seed, t, redraw)
                    else:
                        a = draw_matrix(spec.id, "ginibre", dim, seed, t,
                                        role=f"neg:{ns.label}", redraw=redraw)
                    n2 = hs_norm(a)
                    if n2 == 0.0:
                        raise DeadBand
                    w2 = w2_closed(a)
                    lhs_res = abs(w2 - n2 / np.sqrt(2.0))
                    lhs = lhs_res <= TAU_PRED * n2
                    a2 = a @ a
                    n_eye = norm_eval(ns, eye)
                    if hs_norm(a2) <= 1e-12 * n2 ** 2:
                        rhs = True
                        rhs_margin = np.inf
                    else:
                        ow = bj_orthogonal(eye, a2, ns, grid=G_DISK)
                        rhs = ow.is_orthogonal
                        rhs_margin = abs(ow.min_value - (n_eye - TAU_PRED * n_eye))
                    if not positive and (lhs_res < MARGIN * TAU_PRED * n2
                                         or rhs_margin < MARGIN * TAU_PRED * n_eye):
                        raise DeadBand
                    bad = lhs != rhs or (positive and not lhs)
                    slack = (_rel(TAU_PRED * n2 - lhs_res, n2) if positive
                             else _rel(lhs_res - MARGIN * TAU_PRED * n2, n2))
                    acc.record(_eq_slack(slack, bad), ratio=None,
                               violated=bad, witness=witness(A=a))

                with_redraws(one)


def _run_cotasuperior(spec, seed, acc):
    """w_N(A) = (N(A) + N(A*))/2 iff A is N-parallel to A*; for the
    selfadjoint norms here both sides equal N(A)."""
    for dim in spec.dims:
        for ns in _norm_specs(spec):
            for t in range(spec.trials):
                positive = t % 2 == 0

                def one(redraw, t=t, dim=dim, ns=ns, positive=positive):
                    if positive:
                        a, _, _ = hermitian_phase(spec.id, dim, seed, t, redraw)
                    else:
                        a = draw_matrix(spec.id, "ginibre", dim, seed, t,
                                        role=f"neg:{ns.label}", redraw=redraw)
                    astar = a.conj().T
                    na = norm_eval(ns, a)
                    if na == 0.0:
                        raise DeadBand
                    bound = (na + norm_eval(ns, astar)) / 2.0
                    w = radius_value(a, ns, grid=G_RAD)
                    lhs_res = abs(w - bound)
                    pw = parallel_witness(a, astar, ns, grid=G_PAR)
                    scale = 2.0 * na
                    if not positive and (lhs_res < MARGIN * TAU_PRED * bound
                                         or pw.gap < MARGIN * TAU_PRED * scale):
                        raise DeadBand
                    lhs = lhs_res <= TAU_PRED * bound
                    rhs = pw.is_parallel
                    bad = lhs != rhs or (positive and not lhs)
                    slack = (_rel(TAU_PRED * bound - lhs_res, bound) if positive
                             else _rel(min(lhs_res - MARGIN * TAU_PRED * bound,
                                           pw.gap - MARGIN * TAU_PRED * scale),
                                       bound))
                    acc.record(_eq_slack(slack, bad), ratio=None,
                               violated=bad, witness=witness(A=a))

                with_redraws(one)


def _trace_pairing(a: np.ndarray, p: float) -> float:
    """|tr(|A|^(p-1) U* B)| with B = A*, via the canonical polar parts."""
    pol = spectral.polar(a)
    m = spectral.psd_power(pol.modulus, p - 1.0)
    return abs(np.trace(m @ pol.isometry_part.conj().T @ a.conj().T))


def _run_p_normaloid(spec, seed, acc):
    """Five equivalent ways to say w_p(A) = ||A||_p for 1 < p < infinity:
    parallelism to A*, two trace-pairing equalities, and A = alpha A*."""
    for dim in spec.dims:
        for ns in _norm_specs(spec):
            p = ns.p
            for t in range(spec.trials):
                positive = t % 2 == 0

                def one(redraw, t=t, dim=dim, ns=ns, p=p, positive=positive):
                    if positive:
                        a, _, _ = hermitian_phase(spec.id, dim, seed, t, redraw)
                    else:
                        a = draw_matrix(spec.id, "ginibre", dim, seed, t,
                                        role=f"neg:{ns.label}", redraw=redraw)
                    na = norm_eval(ns, a)
                    if na == 0.0:
                        raise DeadBand
                    nf = hs_norm(a)
                    w = radius_value(a, ns, grid=G_RAD)
                    pw = parallel_witness(a, a.conj().T, ns, grid=G_PAR)
                    t3 = _trace_pairing(a, p)
                    t4 = _trace_pairing(a.conj().T, p)
                    dep = _phase_min_fro(a, a.conj().T)
                    res = (
                        abs(w - na) / na,
                        pw.gap / (2.0 * na),
                        abs(t3 - na ** p) / na ** p,
                        abs(t4 - na ** p) / na ** p,
                        dep / nf,
                    )
                    conds = tuple(r <= TAU_PRED for r in res)
                    if not positive and any(
                            TAU_PRED < r < MARGIN * TAU_PRED for r in res):
                        raise DeadBand
                    bad = (any(c != conds[0] for c in conds)
                           or (positive and not all(conds)))
                    edge = min(TAU_PRED - r if c else r - MARGIN * TAU_PRED
                               for r, c in zip(res, conds))
                    acc.record(_eq_slack(edge, bad), ratio=None,
                               violated=bad, witness=witness(A=a))

                with_redraws(one)


def _run_w1_conditions(spec, seed, acc):
    """Trace-norm attainment: w_1(A) = ||A||_1, trace-norm parallelism to
    A*, the (A*)^2 = lambda |A||A*| identity, the additive |A + lambda A*|
    modulus identity, and (when A is invertible) the trace pairing, all
    decide together."""
    p1 = parse_norm("p:1")
    for dim in spec.dims:
        for t in range(spec.trials):
            positive = t % 2 == 0

            def one(redraw, t=t, dim=dim, positive=positive):
                if positive:
                    a, _, _ = hermitian_phase(spec.id, dim, seed, t, redraw)
                else:
                    a = draw_matrix(spec.id, "ginibre", dim, seed, t,
                                    role="neg", redraw=redraw)
                n1 = norm_eval(p1, a)
                if n1 == 0.0:
                    raise DeadBand
                w = radius_value(a, p1, grid=G_RAD)
                res1 = abs(w - n1) / n1
                pw = parallel_witness(a, a.conj().T, p1, grid=G_PAR)
                res2 = pw.gap / (2.0 * n1)
                wc = w1_parallel_conditions(a, grid=G_PAR)
                if not positive and (TAU_PRED < res1 < MARGIN * TAU_PRED
                                     or TAU_PRED < res2 < MARGIN * TAU_PRED):
                    raise DeadBand
                conds = [res1 <= TAU_PRED, res2 <= TAU_PRED,
                         wc.cond5, wc.cond7]
                if wc.cond10 is not None:
                    conds.append(wc.cond10)
                bad = (any(c != conds[0] for c in conds)
                       or (positive and not all(conds)))
                slack = (_rel(TAU_PRED * n1 - abs(w - n1), n1) if positive
                         else _rel(abs(w - n1) - MARGIN * TAU_PRED * n1, n1))
                acc.record(_eq_slack(slack, bad), ratio=None, violated=bad,
                           witness=witness(A=a))

            with_redraws(one)


def _vec_dependent(x: np.ndarray, y: np.ndarray) -> tuple[bool, float]:
    gram = np.array([[np.vdot(x, x), np.vdot(x, y)],
                     [np.vdot(y, x), np.vdot(y, y)]])
    w = np.linalg.eigvalsh(gram)
    return bool(w[0] <= 1e-10 * max(w[1], 1e-300)), float(w[0] / max(w[1], 1e-300))


def _run_rank_one(spec, seed, acc):
    """w_p(x (x) y) = ||x|| ||y|| iff x, y are linearly dependent for
    1 < p < infinity; at p = 1 orthogonal pairs attain equality anyway,
    reproducing the trace-norm counterexample."""
    for dim in spec.dims:
        for ns in _norm_specs(spec):
            at_p1 = ns.kind == "schatten" and ns.p == 1.0
            for t in range(spec.trials):
                positive = t % 2 == 0

                def one(redraw, t=t, dim=dim, ns=ns, positive=positive):
                    vecs = draw_vectors(spec.id, dim, 2, seed, t,
                                        role=f"xy:{ns.label}", redraw=redraw)
                    x, y = vecs[:, 0], vecs[:, 1]
                    if at_p1:
                        # orthogonalize y against x: independent yet equality
                        y = y - x * (np.vdot(x, y) / np.vdot(x, x))
                    elif positive:
                        phase = draw_phase(spec.id, dim, seed, t,
                                           role=f"c:{ns.label}", redraw=redraw)
                        y = np.exp(1j * phase) * (np.linalg.norm(y) /
                                                  np.linalg.norm(x)) * x
                    prod = np.linalg.norm(x) * np.linalg.norm(y)
                    if prod < 1e-12:
                        raise DeadBand
                    tm = cm.rank_one(x, y)
                    w = radius_value(tm, ns, grid=G_RAD)
                    res = abs(w - prod) / prod
                    if at_p1:
                        acc.record(_rel(TAU_PRED * prod - abs(w - prod), prod),
                                   ratio=None,
                                   witness=witness(x=x, y=y))
                        return
                    dep, dep_ratio = _vec_dependent(x, y)
                    if not positive and (res < MARGIN * TAU_PRED
                                         or dep_ratio < 1e-6):
                        raise DeadBand
                    lhs = res <= TAU_PRED
                    bad = lhs != dep or (positive and not lhs)
                    slack = (_rel(TAU_PRED * prod - abs(w - prod), prod)
                             if positive else res - MARGIN * TAU_PRED)
                    acc.record(_eq_slack(slack, bad), ratio=None,
                               violated=bad, witness=witness(x=x, y=y))

                with_redraws(one)


# ---------------------------------------------------------------------------
# vector inequality and product bounds


def _run_buzano(spec, seed, acc):
    """|<x,z><z,y>| <= (|<x,y>| + ||x|| ||y||)/2 for unit z; trial 0 of
    each dim is the constructed equality triple."""
    for dim in spec.dims:
        for t in range(spec.trials):
            if t == 0 and dim >= 2:
                x = np.zeros(dim, dtype=np.complex128)
                y = np.zeros(dim, dtype=np.complex128)
                x[0] = 1.0
                y[1] = 1.0
                z = (x + y) / np.sqrt(2.0)
            else:
                vecs = draw_vectors(spec.id, dim, 3, seed, t)
                x, y, z = vecs[:, 0], vecs[:, 1], vecs[:, 2]
                nz = np.linalg.norm(z)
                if nz < 1e-12:
                    continue
                z = z / nz
            lhs = abs(np.vdot(z, x) * np.vdot(y, z))
            rhs = (abs(np.vdot(y, x))
                   + np.linalg.norm(x) * np.linalg.norm(y)) / 2.0
            if rhs == 0.0:
                continue
            acc.record(_rel(rhs - lhs, rhs) + TAU_REL, ratio=lhs / rhs,
                       witness=witness(x=x, y=y, z=z))


def _run_producto(spec, seed, acc):
    """w_N(AX) <= N(AX) <= N(A) N(X) <= 4 w_N(A) w_N(X)."""
    specs = _norm_specs(spec)
    for dim in spec.dims:
        for t in range(spec.trials):
            a = draw_matrix(spec.id, "ginibre", dim, seed, t, role="A")
            x = draw_matrix(spec.id, "ginibre", dim, seed, t, role="X")
            ax = a @ x
            w_ax = radius_values(ax, specs, grid=G_RAD)
            w_a = radius_values(a, specs, grid=G_RAD)
            w_x = radius_values(x, specs, grid=G_RAD)
            for j, ns in enumerate(specs):
                n_ax = norm_eval(ns, ax)
                prod = norm_eval(ns, a) * norm_eval(ns, x)
                quad = 4.0 * w_a[j] * w_x[j]
                slack = min(_rel(n_ax - w_ax[j], n_ax),
                            _rel(prod - n_ax, prod),
                            _rel(quad - prod, quad))
                acc.record(slack + TAU_REL,
                           ratio=w_ax[j] / quad if quad > 0 else None,
                           witness=witness(A=a, X=x))


def _run_product_dna(spec, seed, acc):
    """w_N(AX) <= (N(A) + dist(A, scalars)) w_N(X) <= 2 N(A) w_N(X)
    <= 4 w_N(A) w_N(X), with dist(A, scalars) <= N(A)."""
    specs = _norm_specs(spec)
    for dim in spec.dims:
        for t in range(spec.trials):
            a = draw_matrix(spec.id, "ginibre", dim, seed, t, role="A")
            x = draw_matrix(spec.id, "ginibre", dim, seed, t, role="X")
            ax = a @ x
            w_ax = radius_values(ax, specs, grid=G_RAD)
            w_a = radius_values(a, specs, grid=G_RAD)
            w_x = radius_values(x, specs, grid=G_RAD)
            for j, ns in enumerate(specs):
                na = norm_eval(ns, a)
                d = scalar_distance(a, ns, grid=G_DISK).distance
                b1 = (na + d) * w_x[j]
                b2 = 2.0 * na * w_x[j]
                b3 = 4.0 * w_a[j] * w_x[j]
                slack = min(_rel(b1 - w_ax[j], b1), _rel(b2 - b1, b2),
                            _rel(b3 - b2, b3), _rel(na - d, na))
                acc.record(slack + TAU_REL,
                           ratio=w_ax[j] / b1 if b1 > 0 else None,
                           witness=witness(A=a, X=x))


def _run_commute_star(spec, seed, acc):
    """AX = XA* (and the phase-rotated minus case) forces
    w_N(AX) <= N(A) w_N(X)."""
    specs = _norm_specs(spec)
    for dim in spec.dims:
        for t in range(spec.trials):
            a, x = draw_matrix(spec.id, "commuting_star_pair", dim, seed, t)
            scale = hs_norm(a) * hs_norm(x)
            defect = np.linalg.norm(a @ x - x @ a.conj().T)
            if defect > 1e-10 * max(scale, 1e-300):
                raise RuntimeError("commuting-star pair construction drifted")
            am = 1j * a
            defect_minus = np.linalg.norm(am @ x + x @ am.conj().T)
            if defect_minus > 1e-10 * max(scale, 1e-300):
                raise RuntimeError("minus-case identity drifted")
            ax = a @ x
            w_ax = radius_values(ax, specs, grid=G_RAD)
            w_x = radius_values(x, specs, grid=G_RAD)
            for j, ns in enumerate(specs):
                bound = norm_eval(ns, a) * w_x[j]
                acc.record(_rel(bound - w_ax[j], bound) + TAU_REL,
                           ratio=w_ax[j] / bound if bound > 0 else None,
                           witness=witness(A=a, X=x))


def _run_bhatia_zhan(spec, seed, acc):
    """||A + iB||_p^2 <= ||A||_p^2 + 2^(1-2/p) ||B||_p^2 for A psd, B
    Hermitian, p >= 2; when both are psd the 2^(1-2/p) factor drops to 1."""
    specs = _norm_specs(spec)
    for dim in spec.dims:
        for t in range(spec.trials):
            kind = _ens_cycle(spec, t)
            tm = draw_matrix(spec.id, kind, dim, seed, t)
            h, k = cartesian_parts(tm)
            for ns in specs:
                p = ns.p
                nt2 = norm_eval(ns, tm) ** 2
                nh2 = norm_eval(ns, h) ** 2
                nk2 = norm_eval(ns, k) ** 2
                bound = nh2 + 2.0 ** (1.0 - 2.0 / p) * nk2
                slack = _rel(bound - nt2, bound)
                ratio = nt2 / bound if bound > 0 else None
                if kind == "accretive_dissipative":
                    both = nh2 + nk2
                    slack = min(slack, _rel(both - nt2, both))
                acc.record(slack + TAU_REL, ratio=ratio,
                           witness=witness(T=tm))


def _run_accretive(spec, seed, acc):
    """w_p(AX) <= sqrt(1 + 2^(1-2/p)) ||A|| w_p(X) for accretive X,
    p >= 2; the constant improves to sqrt(2) when X is also dissipative."""
    specs = _norm_specs(spec)
    for dim in spec.dims:
        for t in range(spec.trials):
            kind = _ens_cycle(spec, t)
            x = draw_matrix(spec.id, kind, dim, seed, t, role="X")
            a = draw_matrix(spec.id, "ginibre", dim, seed, t, role="A")
            na_op = norm_eval(OPERATOR, a)
            ax = a @ x
            w_ax = radius_values(ax, specs, grid=G_RAD)
            w_x = radius_values(x, specs, grid=G_RAD)
            for j, ns in enumerate(specs):
                c = np.sqrt(1.0 + 2.0 ** (1.0 - 2.0 / ns.p))
                if kind == "accretive_dissipative":
                    c = min(c, np.sqrt(2.0))
                bound = c * na_op * w_x[j]
                acc.record(_rel(bound - w_ax[j], bound) + TAU_REL,
                           ratio=w_ax[j] / bound if bound > 0 else None,
                           witness=witness(A=a, X=x))


def _run_cota_nui(spec, seed, acc):
    """When AB is selfadjoint, w_N(AB) = N(AB) <= w_N(BA)."""
    specs = _norm_specs(spec)
    for dim in spec.dims:
        for t in range(spec.trials):
            a, b = draw_matrix(spec.id, "selfadjoint_product_pair",
                               dim, seed, t)
            ab = a @ b
            herm_defect = np.linalg.norm(ab - ab.conj().T)
            if herm_defect > 1e-8 * max(hs_norm(ab), 1e-300):
                raise RuntimeError("selfadjoint product pair drifted")
            ab = (ab + ab.conj().T) / 2.0
            w_ab = radius_values(ab, specs, grid=G_RAD)
            w_ba = radius_values(b @ a, specs, grid=G_RAD)
            for j, ns in enumerate(specs):
                n_ab = norm_eval(ns, ab)
                slack = min(_rel(TAU_REL * n_ab - abs(w_ab[j] - n_ab), n_ab)
                            + TAU_REL,
                            _rel(w_ba[j] - n_ab, n_ab) + TAU_REL)
                acc.record(slack,
                           ratio=n_ab / w_ba[j] if w_ba[j] > 0 else None,
                           witness=witness(A=a, B=b))


# ---------------------------------------------------------------------------
# scrutiny: claims the suite expects to falsify


def _run_scrutiny_aluthge_w2(spec, seed, acc):
    """Printed claim: w_2(A) = w_2(aluthge(A)).  The trace term survives
    the transform but the Frobenius norm shrinks off the normal locus, so
    counterexamples are expected (square-zero samples give aluthge(A) = 0)."""
    for dim in spec.dims:
        for t in range(spec.trials):
            a = draw_matrix(spec.id, _ens_cycle(spec, t), dim, seed, t)
            if hs_norm(a) == 0.0:
                continue
            w_a = w2_closed(a)
            w_at = w2_closed(spectral.aluthge(a))
            gap = abs(w_a - w_at)
            scale = max(w_a, 1e-300)
            slack = _rel(MARGIN * TAU_PRED * scale - gap, scale)
            acc.record(slack, ratio=None,
                       witness=witness(A=a, aluthge=spectral.aluthge(a)))


def _run_scrutiny_bp6_lower(spec, seed, acc):
    """Printed claim: w_N(|A|)/2 <= w_N(aluthge(A)).  Square-zero samples
    have aluthge(A) = 0 with |A| nonzero, so every trial refutes it."""
    specs = _norm_specs(spec)
    for dim in spec.dims:
        for t in range(spec.trials):
            a = draw_matrix(spec.id, "square_zero", dim, seed, t)
            if hs_norm(a) == 0.0:
                continue
            mod = spectral.polar(a).modulus
            at = spectral.aluthge(a)
            w_mod = radius_values(mod, specs, grid=G_RAD)
            w_at = radius_values(at, specs, grid=G_RAD)
            for j, ns in enumerate(specs):
                lhs = 0.5 * w_mod[j]
                scale = max(lhs, 1e-300)
                slack = _rel(w_at[j] + MARGIN * TAU_PRED * scale - lhs, scale)
                acc.record(slack, ratio=None,
                           witness=witness(A=a, aluthge=at))


# ---------------------------------------------------------------------------
# the registry table

GENERAL = ("ginibre", "hermitian", "psd", "normal", "nilpotent",
           "square_zero", "rank_one", "accretive", "accretive_dissipative")


def _sch(label_p=None, lo=None, hi=None, strict_lo=False):
    def ok(ns: NormSpec) -> bool:
        if ns.kind != "schatten":
            return False
        if label_p is not None and ns.p != label_p:
            return False
        if lo is not None and (ns.p <= lo if strict_lo else ns.p < lo):
            return False
        if hi is not None and ns.p > hi:
            return False
        return True
    return ok


def _op_only(ns: NormSpec) -> bool:
    return ns.kind == "operator"


def _any_norm(ns: NormSpec) -> bool:
    return True


_DEFS = [
    CheckDef(
        id="eq-1.1",
        anchor="||A||/2 <= w(A) <= ||A|| (operator norm)",
        mode="inequality",
        ensembles=("ginibre", "normal"), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=("op",), trials=200,
        run=_run_eq_1_1, norm_ok=_op_only),
    CheckDef(
        id="yamazaki-consistency",
        anchor="sup_theta ||Re(e^(i theta) A)|| dominates sup_x |<Ax, x>| "
               "over unit vectors and sits inside [||A||/2, ||A||]",
        mode="inequality",
        ensembles=("ginibre",), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=("op",), trials=200,
        run=_run_yamazaki, norm_ok=_op_only),
    CheckDef(
        id="thm-4.1",
        anchor="max(||A||_2/sqrt(2), (||A||_2 + |tr A^2|^(1/2))/2) <= w_2(A)",
        mode="inequality",
        ensembles=("ginibre", "normal", "nilpotent"), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=("p:2",), trials=200,
        run=_run_thm_4_1, norm_ok=_sch(label_p=2.0)),
    CheckDef(
        id="prop-w2-upper",
        anchor="w_2(A) = ||A||_2 iff A is Schatten-2 parallel to A*",
        mode="equivalence",
        ensembles=("hermitian", "ginibre"), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=("p:2",), trials=200,
        run=_run_w2_upper, norm_ok=_sch(label_p=2.0)),
    CheckDef(
        id="prop-equiv-cota-inf",
        anchor="w_2(A) = ||A||_2/sqrt(2) iff I is Schatten-p orthogonal "
               "to A^2 (per p)",
        mode="equivalence",
        ensembles=("square_zero", "normal", "ginibre"), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=("p:1", "p:1.5", "p:2", "p:3"),
        trials=100, run=_run_equiv_cota_inf,
        norm_ok=_sch(lo=1.0), min_dim=2),
    CheckDef(
        id="rem-aluthge-trace",
        anchor="|tr(aluthge(A)^2)| = |tr(A^2)|",
        mode="inequality",
        ensembles=("ginibre", "normal", "nilpotent", "square_zero", "psd"),
        allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=(), trials=200,
        run=_run_aluthge_trace, min_dim=2),
    CheckDef(
        id="lemma-bp-1",
        anchor="sup_theta N(Im(e^(i theta) A)) = w_N(A)",
        mode="inequality",
        ensembles=("ginibre", "nilpotent"), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=ALLN, trials=200,
        run=_run_bp_angle("im")),
    CheckDef(
        id="lemma-bp-2",
        anchor="sup over alpha^2 + beta^2 = 1 of N(alpha Re A + beta Im A) "
               "= w_N(A)",
        mode="inequality",
        ensembles=("ginibre", "nilpotent"), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=ALLN, trials=200,
        run=_run_bp_angle("circle")),
    CheckDef(
        id="lemma-bp-3",
        anchor="w_N(A) <= (N(A) + N(A*))/2",
        mode="inequality",
        ensembles=("ginibre", "nilpotent"), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=ALLN, trials=200,
        run=_run_bp_3),
    CheckDef(
        id="lemma-bp-4",
        anchor="w_N(AX +/- XA*) <= (N(A) + N(A*)) w_N(X)",
        mode="inequality",
        ensembles=("ginibre",), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=ALLN, trials=200,
        run=_run_bp_4),
    CheckDef(
        id="lemma-bp-5",
        anchor="w_N(A) = N(A)/2 implies Re(e^(i theta) A) is N-parallel "
               "to Im(e^(i theta) A) for all theta",
        mode="inequality",
        ensembles=("square_zero",), allowed=("square_zero",),
        dims=(2, 3, 4, 6, 8), norms=("op",), trials=100,
        run=_run_bp_5, norm_ok=_op_only, min_dim=2),
    CheckDef(
        id="lemma-bp-6-upper",
        anchor="w_N(aluthge(A)) <= N(|A|^(1/2))^2 w_N(U), A = U|A|",
        mode="inequality",
        ensembles=("ginibre", "nilpotent", "normal"), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=ALLN, trials=200,
        run=_run_bp_6_upper),
    CheckDef(
        id="prop-bjn-1",
        anchor="w_N(T) = N(T) and T radius-orthogonal to A imply T "
               "N-orthogonal to A (N selfadjoint)",
        mode="inequality",
        ensembles=("hermitian", "ginibre"), allowed=("hermitian", "ginibre"),
        dims=(2, 3, 4, 6), norms=("op", "p:1", "p:1.5", "p:3"), trials=60,
        run=_run_bjn_1),
    CheckDef(
        id="prop-bjn-2",
        anchor="w_N(T) = N(T)/2 and T N-orthogonal to A imply T "
               "radius-orthogonal to A",
        mode="inequality",
        ensembles=("square_zero", "ginibre"),
        allowed=("square_zero", "ginibre"),
        dims=(2, 4, 6, 8), norms=("op",), trials=60,
        run=_run_bjn_2, norm_ok=_op_only, min_dim=2),
    CheckDef(
        id="thm-cotasuperior",
        anchor="w_N(A) = (N(A) + N(A*))/2 iff A is N-parallel to A*",
        mode="equivalence",
        ensembles=("hermitian", "ginibre"), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=ALLN, trials=100,
        run=_run_cotasuperior),
    CheckDef(
        id="cor-p-normaloid",
        anchor="for 1 < p < inf: w_p(A) = ||A||_p iff A parallel to A* "
               "iff |tr(|A|^(p-1) U* A*)| = ||A||_p^p iff "
               "|tr(|A*|^(p-1) V* A)| = ||A*||_p^p iff A = alpha A*",
        mode="equivalence",
        ensembles=("hermitian", "ginibre"), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=("p:1.5", "p:2", "p:3", "p:5"),
        trials=100, run=_run_p_normaloid,
        norm_ok=_sch(lo=1.0, strict_lo=True)),
    CheckDef(
        id="cor-w1-conditions",
        anchor="w_1(A) = ||A||_1, trace-norm parallelism to A*, "
               "(A*)^2 = lambda |A||A*|, |A + lambda A*| = |A| + |A*|, and "
               "the invertible-case trace pairing decide together",
        mode="equivalence",
        ensembles=("hermitian", "ginibre"), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=("p:1",), trials=100,
        run=_run_w1_conditions, norm_ok=_sch(label_p=1.0)),
    CheckDef(
        id="prop-p-equiv",
        anchor="2^(-1/p)||A||_p <= w_p(A) for p <= 2 and "
               "2^(1/p-1)||A||_p <= w_p(A) for p >= 2, upper ||A||_p",
        mode="inequality",
        ensembles=("ginibre", "nilpotent", "square_zero"), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=PGRID, trials=200,
        run=_run_p_equiv, norm_ok=_sch(), min_dim=2),
    CheckDef(
        id="prop-w1-degenerate",
        anchor="w_1(T) = ||T||_1/2 iff T = 0",
        mode="inequality",
        ensembles=("ginibre", "normal", "nilpotent", "square_zero"),
        allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=("p:1",), trials=400,
        run=_run_w1_degenerate, norm_ok=_sch(label_p=1.0), min_dim=2),
    CheckDef(
        id="cor-rank-one",
        anchor="w_p(x (x) y) = ||x|| ||y|| iff x, y dependent (1 < p < "
               "inf); at p = 1 orthogonal pairs attain equality regardless",
        mode="equivalence",
        ensembles=("rank_one",), allowed=("rank_one",),
        dims=(2, 3, 4, 6, 8), norms=PGRID, trials=100,
        run=_run_rank_one, norm_ok=_sch()),
    CheckDef(
        id="rem-buzano",
        anchor="|<x,z><z,y>| <= (|<x,y>| + ||x|| ||y||)/2, z unit",
        mode="inequality",
        ensembles=("ginibre",), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=(), trials=200,
        run=_run_buzano),
    CheckDef(
        id="eq-ineq-producto",
        anchor="w_N(AX) <= N(AX) <= N(A) N(X) <= 4 w_N(A) w_N(X)",
        mode="inequality",
        ensembles=("ginibre",), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=ALLN, trials=200,
        run=_run_producto),
    CheckDef(
        id="thm-product-DNA",
        anchor="w_N(AX) <= (N(A) + dist_N(A, scalars)) w_N(X) "
               "<= 2 N(A) w_N(X) <= 4 w_N(A) w_N(X)",
        mode="inequality",
        ensembles=("ginibre",), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=ALLN, trials=200,
        run=_run_product_dna),
    CheckDef(
        id="cor-commute-star",
        anchor="AX = XA* or AX = -XA* implies w_N(AX) <= N(A) w_N(X)",
        mode="inequality",
        ensembles=("commuting_star_pair",), allowed=("commuting_star_pair",),
        dims=(3, 4, 6, 8), norms=ALLN, trials=200,
        run=_run_commute_star, min_dim=3),
    CheckDef(
        id="lemma-bhatia-zhan",
        anchor="||A + iB||_p^2 <= ||A||_p^2 + 2^(1-2/p) ||B||_p^2 for "
               "A psd, B Hermitian, p >= 2; factor 1 when both psd",
        mode="inequality",
        ensembles=("accretive", "accretive_dissipative"),
        allowed=("accretive", "accretive_dissipative"),
        dims=(2, 3, 4, 6, 8), norms=("p:2", "p:3", "p:5"), trials=200,
        run=_run_bhatia_zhan, norm_ok=_sch(lo=2.0)),
    CheckDef(
        id="thm-accretive",
        anchor="w_p(AX) <= sqrt(1 + 2^(1-2/p)) ||A|| w_p(X) for accretive "
               "X, p >= 2; constant sqrt(2) when X is also dissipative",
        mode="inequality",
        ensembles=("accretive", "accretive_dissipative"),
        allowed=("accretive", "accretive_dissipative"),
        dims=(2, 3, 4, 6, 8), norms=("p:2", "p:3", "p:5"), trials=200,
        run=_run_accretive, norm_ok=_sch(lo=2.0)),
    CheckDef(
        id="eq-cota-nui",
        anchor="AB selfadjoint implies w_N(AB) = N(AB) <= w_N(BA)",
        mode="inequality",
        ensembles=("selfadjoint_product_pair",),
        allowed=("selfadjoint_product_pair",),
        dims=(2, 3, 4, 6, 8), norms=ALLN, trials=200,
        run=_run_cota_nui),
    CheckDef(
        id="scrutiny-aluthge-w2",
        anchor="printed claim w_2(A) = w_2(aluthge(A)); the suite expects "
               "counterexamples off the normal locus",
        mode="scrutiny",
        ensembles=("square_zero", "ginibre"), allowed=GENERAL,
        dims=(2, 3, 4, 6, 8), norms=("p:2",), trials=100,
        run=_run_scrutiny_aluthge_w2, norm_ok=_sch(label_p=2.0), min_dim=2),
    CheckDef(
        id="scrutiny-bp-6-lower",
        anchor="printed claim w_N(|A|)/2 <= w_N(aluthge(A)); square-zero "
               "samples refute it",
        mode="scrutiny",
        ensembles=("square_zero",), allowed=("square_zero",),
        dims=(2, 3, 4, 6, 8), norms=ALLN, trials=100,
        run=_run_scrutiny_bp6_lower, min_dim=2),
]

REGISTRY: dict[str, CheckDef] = {d.id: d for d in _DEFS}
