"""Property-check suite for the radius and geometry layers.

run_check executes a single registered check deterministically;
run_suite executes many, merging reports in registry order no matter how
trials are scheduled.  Report JSON is byte-stable for a fixed (ids, seed).
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ..norms import parse_norm
from ._registry import REGISTRY, CheckDef, CheckSpec
from ._support import Accumulator

__all__ = [
    "CheckSpec",
    "CheckReport",
    "registry_ids",
    "default_spec",
    "make_spec",
    "run_check",
    "run_suite",
    "report_json",
    "format_table",
    "suite_passed",
]


@dataclass(frozen=True)
class CheckReport:
    """Aggregated outcome of one check."""

    id: str
    mode: str
    trials_run: int
    violations: int
    counterexamples: int
    max_violation: float
    sharpness_ratio: float
    witnesses: list = field(default_factory=list)
    error: str | None = None

    @property
    def passed(self) -> bool:
        if self.error is not None:
            return False
        if self.mode == "scrutiny":
            return True
        return self.violations == 0


def registry_ids() -> list[str]:
    return list(REGISTRY)


def default_spec(check_id: str) -> CheckSpec:
    defn = _lookup(check_id)
    return CheckSpec(id=defn.id, ensembles=defn.ensembles, dims=defn.dims,
                     p_grid=defn.norms, trials=defn.trials, mode=defn.mode)


def make_spec(check_id: str, dims=None, p_grid=None, trials=None,
              ensembles=None) -> CheckSpec:
    """Registry defaults with overrides filtered to what the check admits.

    Overrides that the check cannot use (a norm outside its validity
    range, a dim below its floor) are dropped; if nothing survives the
    defaults stay."""
    defn = _lookup(check_id)
    spec = default_spec(check_id)
    if dims is not None:
        kept = tuple(d for d in dims if d >= defn.min_dim)
        spec = _replace(spec, dims=kept or defn.dims)
    if p_grid is not None:
        kept = tuple(lbl for lbl in p_grid if defn.norm_ok(parse_norm(lbl)))
        if defn.norms:
            spec = _replace(spec, p_grid=kept or defn.norms)
    if trials is not None:
        spec = _replace(spec, trials=max(1, int(trials)))
    if ensembles is not None:
        spec = _replace(spec, ensembles=tuple(ensembles))
    return spec


def _replace(spec: CheckSpec, **kw) -> CheckSpec:
    base = dict(id=spec.id, ensembles=spec.ensembles, dims=spec.dims,
                p_grid=spec.p_grid, trials=spec.trials, mode=spec.mode)
    base.update(kw)
    return CheckSpec(**base)


def _lookup(check_id: str) -> CheckDef:
    if check_id not in REGISTRY:
        raise ValueError(f"unknown check id: {check_id!r}")
    return REGISTRY[check_id]


def run_check(spec: CheckSpec, seed: int = 0) -> CheckReport:
    """Execute one check; deterministic in (spec, seed)."""
    defn = _lookup(spec.id)
    if spec.mode != defn.mode:
        raise ValueError(
            f"check {spec.id!r} has mode {defn.mode!r}, got {spec.mode!r}")
    bad_ens = [e for e in spec.ensembles if e not in defn.allowed]
    if bad_ens:
        raise ValueError(
            f"ensemble kind mismatch for {spec.id!r}: {bad_ens}")
    if not spec.ensembles:
        raise ValueError(f"check {spec.id!r} needs at least one ensemble")
    bad_norm = [lbl for lbl in spec.p_grid
                if not defn.norm_ok(parse_norm(lbl))]
    if bad_norm:
        raise ValueError(
            f"norms not admitted by {spec.id!r}: {bad_norm}")
    if defn.norms and not spec.p_grid:
        raise ValueError(f"check {spec.id!r} needs a nonempty norm grid")
    bad_dim = [d for d in spec.dims if d < defn.min_dim]
    if bad_dim:
        raise ValueError(
            f"dims below the floor {defn.min_dim} for {spec.id!r}: {bad_dim}")
    acc = Accumulator(defn.mode)
    defn.run(spec, seed, acc)
    return CheckReport(id=spec.id, mode=defn.mode, **acc.summary())


def run_suite(ids, seed: int = 0, jobs: int = 1) -> list[CheckReport]:
    """Run several checks; reports come back in registry order.

    Per-check errors become failed reports rather than aborting the rest.
    """
    if ids == "all" or ids is None:
        ids = registry_ids()
    ids = list(ids)
    if not ids:
        raise ValueError("no check ids given")
    order = {cid: k for k, cid in enumerate(registry_ids())}
    ids.sort(key=lambda cid: order.get(cid, len(order)))

    def one(cid: str) -> CheckReport:
        try:
            return run_check(default_spec(cid), seed=seed)
        except Exception as exc:
            mode = REGISTRY[cid].mode if cid in REGISTRY else "inequality"
            return CheckReport(id=cid, mode=mode, trials_run=0, violations=1,
                               counterexamples=0, max_violation=-1.0,
                               sharpness_ratio=0.0, witnesses=[],
                               error=str(exc))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(one, ids))
    return [one(cid) for cid in ids]


def run_suite_specs(specs, seed: int = 0, jobs: int = 1) -> list[CheckReport]:
    """run_suite over explicit CheckSpecs (for overridden parameters)."""
    specs = list(specs)
    if not specs:
        raise ValueError("no check specs given")
    order = {cid: k for k, cid in enumerate(registry_ids())}
    specs.sort(key=lambda s: order.get(s.id, len(order)))

    def one(spec: CheckSpec) -> CheckReport:
        try:
            return run_check(spec, seed=seed)
        except Exception as exc:
            mode = REGISTRY[spec.id].mode if spec.id in REGISTRY else "inequality"
            return CheckReport(id=spec.id, mode=mode, trials_run=0,
                               violations=1, counterexamples=0,
                               max_violation=-1.0, sharpness_ratio=0.0,
                               witnesses=[], error=str(exc))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(one, specs))
    return [one(s) for s in specs]


def report_json(reports) -> str:
    """Byte-stable JSON array of reports (sorted keys, round-trip floats)."""
    out = []
    for r in reports:
        entry = {
            "id": r.id,
            "paper_anchor": REGISTRY[r.id].anchor if r.id in REGISTRY else "",
            "mode": r.mode,
            "trials": r.trials_run,
            "violations": r.violations,
            "max_violation": r.max_violation,
            "sharpness_ratio": r.sharpness_ratio,
            "witnesses": r.witnesses,
        }
        if r.mode == "scrutiny":
            entry["counterexamples"] = r.counterexamples
        if r.error is not None:
            entry["error"] = r.error
        out.append(entry)
    return json.dumps(out, sort_keys=True, indent=2)


def format_table(reports) -> str:
    """Human-readable outcome table."""
    width = max([len(r.id) for r in reports] + [20])
    lines = [f"{'check':<{width}}  {'outcome':<28}  sharpness"]
    for r in reports:
        if r.error is not None:
            status = f"error: {r.error}"[:60]
        elif r.mode == "scrutiny":
            if r.counterexamples > 0:
                status = f"counterexamples {r.counterexamples}/{r.trials_run}"
            else:
                status = "claim survived sampling"
        elif r.violations == 0:
            status = f"pass ({r.trials_run} trials)"
        else:
            status = f"FAIL ({r.violations}/{r.trials_run})"
        lines.append(f"{r.id:<{width}}  {status:<28}  {r.sharpness_ratio:.6f}")
    return "\n".join(lines)


def suite_passed(reports) -> bool:
    """True iff every non-scrutiny check passed and nothing errored."""
    return all(r.passed for r in reports)
