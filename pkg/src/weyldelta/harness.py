"""Experiment orchestration: info, seeded sampling, the full scan table, hunts.

Reproducibility contract: every trial draws from its own generator, seeded by
SeedSequence(entropy=master_seed, spawn_key=(weight_index, trial_index)).
Results are therefore independent of thread count and can be regenerated one
trial at a time.  Trial records serialize to JSONL with a fixed key set so
that identical configurations produce byte-identical files; wall time is
reported in summaries only.
"""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import minimize

from . import catalog, invariants
from .confgeom import Configuration, canonical_collinear, regularity_margin, sample_configuration
from .errors import InputError, NumericalFailure
from .liealg import DEFAULT_MAX_WEYL_ORDER, RootSystem, WeightData, WeylOrbit, parse_weight, root_system, weyl_orbit
from .oracles import collinear_delta_closed_form
from .pipeline import evaluate_configuration
from .spectral import collinear_rank

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_VIOLATION = 3
EXIT_NUMERICAL = 4


@dataclass
class ExperimentConfig:
    """Knobs for one harness invocation."""

    algebra: str = "A3"
    weight: str | None = None
    trials: int = 1000
    seed: int = 1
    scale: float = 1.0
    margin_min: float = 1e-12
    out: str | None = None
    threads: int = 1
    restarts: int = 20
    max_iterations: int = 2000
    simplex_scale: float = 0.5
    max_weyl_order: int = DEFAULT_MAX_WEYL_ORDER
    # Slack below the baseline before a sample counts as a violation; the
    # baseline itself carries ~1e-13 float noise.
    violation_rtol: float = 1e-9

    def config_hash(self) -> str:
        blob = json.dumps(asdict(self), sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def validate(self) -> None:
        if self.trials < 1:
            raise InputError(f"trials must be >= 1, got {self.trials}")
        if self.threads < 1:
            raise InputError(f"threads must be >= 1, got {self.threads}")
        if self.restarts < 1:
            raise InputError(f"restarts must be >= 1, got {self.restarts}")
        if not self.scale > 0:
            raise InputError(f"scale must be positive, got {self.scale}")


@dataclass
class TrialRecord:
    """One evaluated random configuration.

    ``wall_time`` stays out of the JSONL line: files must be byte-identical
    across reruns of the same seed.
    """

    weight: str
    trial: int
    seed: int
    delta: float | None
    rank: int | None
    r_col: int
    margin: float | None
    wall_time: float = 0.0
    error: str | None = None

    def jsonl(self) -> str:
        payload = {
            "weight": self.weight,
            "trial": self.trial,
            "seed": self.seed,
            "delta": self.delta,
            "rank": self.rank,
            "r_col": self.r_col,
            "margin": self.margin,
        }
        if self.error is not None:
            payload["error"] = self.error
        return json.dumps(payload)


class WeightContext(NamedTuple):
    """Everything fixed once the (algebra, weight) pair is chosen."""

    rs: RootSystem
    wd: WeightData
    orbit: WeylOrbit
    r_col: int
    delta_col_closed: float
    delta_col_pipeline: float


def prepare_weight(cfg: ExperimentConfig, weight_spec: str | None = None) -> WeightContext:
    """Build the root system, weight data, orbit and collinear baselines."""
    spec = weight_spec if weight_spec is not None else cfg.weight
    if spec is None:
        raise InputError("no weight given; pass --weight")
    rs = root_system(cfg.algebra, cfg.max_weyl_order)
    wd = parse_weight(rs, spec)
    orbit = weyl_orbit(rs, wd)
    r_col = collinear_rank(rs, wd, orbit)
    closed = collinear_delta_closed_form(rs, wd, orbit)
    pipeline_val = evaluate_configuration(rs, wd, orbit, canonical_collinear(rs), r_col).delta
    return WeightContext(rs, wd, orbit, r_col, closed, pipeline_val)


def trial_generator(master_seed: int, weight_index: int, trial_index: int) -> np.random.Generator:
    """The per-trial RNG stream (counter-style split off the master seed)."""
    seq = np.random.SeedSequence(entropy=master_seed, spawn_key=(weight_index, trial_index))
    return np.random.default_rng(seq)


def evaluate_trial(
    ctx: WeightContext, cfg: ExperimentConfig, weight_index: int, trial_index: int
) -> TrialRecord:
    """Sample one configuration and evaluate the full pipeline on it."""
    rng = trial_generator(cfg.seed, weight_index, trial_index)
    started = time.perf_counter()
    try:
        x = sample_configuration(
            ctx.rs, rng, scale=cfg.scale, margin_min=cfg.margin_min
        )
        margin = regularity_margin(ctx.rs, x).margin
        report = evaluate_configuration(ctx.rs, ctx.wd, ctx.orbit, x, ctx.r_col)
        return TrialRecord(
            weight=ctx.wd.spec,
            trial=trial_index,
            seed=cfg.seed,
            delta=report.delta,
            rank=report.numerical_rank,
            r_col=ctx.r_col,
            margin=margin,
            wall_time=time.perf_counter() - started,
        )
    except NumericalFailure as exc:
        return TrialRecord(
            weight=ctx.wd.spec,
            trial=trial_index,
            seed=cfg.seed,
            delta=None,
            rank=None,
            r_col=ctx.r_col,
            margin=None,
            wall_time=time.perf_counter() - started,
            error=str(exc),
        )


def _run_trials(ctx: WeightContext, cfg: ExperimentConfig, weight_index: int) -> list[TrialRecord]:
    indices = range(cfg.trials)
    if cfg.threads == 1:
        return [evaluate_trial(ctx, cfg, weight_index, i) for i in indices]
    with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
        return list(pool.map(lambda i: evaluate_trial(ctx, cfg, weight_index, i), indices))


def _violations(records: list[TrialRecord], ctx: WeightContext, rtol: float) -> dict:
    cutoff = ctx.delta_col_pipeline * (1.0 - rtol)
    delta_bad = [r.trial for r in records if r.delta is not None and r.delta < cutoff]
    rank_bad = [r.trial for r in records if r.rank is not None and r.rank < ctx.r_col]
    failures = [r.trial for r in records if r.error is not None]
    return {"delta": delta_bad, "rank": rank_bad, "numerical": failures}


def _exit_code(violations: dict) -> int:
    if violations["delta"] or violations["rank"]:
        return EXIT_VIOLATION
    if violations["numerical"]:
        return EXIT_NUMERICAL
    return EXIT_OK


class SampleResult(NamedTuple):
    records: list
    summary: dict
    exit_code: int


def run_info(cfg: ExperimentConfig) -> dict:
    """Structural facts and collinear baselines for one (algebra, weight)."""
    ctx = prepare_weight(cfg)
    return {
        "algebra": cfg.algebra,
        "weight": ctx.wd.spec,
        "m": ctx.wd.m,
        "n": ctx.wd.n,
        "positive_roots": ctx.rs.npos,
        "weyl_order": ctx.orbit.group_order,
        "stabilizer_order": ctx.orbit.stabilizer_order,
        "r_col": ctx.r_col,
        "collinear_delta_closed_form": ctx.delta_col_closed,
        "collinear_delta_pipeline": ctx.delta_col_pipeline,
        "closed_vs_pipeline_rel": abs(ctx.delta_col_closed - ctx.delta_col_pipeline)
        / ctx.delta_col_closed,
    }


def run_sample(cfg: ExperimentConfig, weight_index: int = 0) -> SampleResult:
    """Seeded Monte-Carlo trials for one weight; JSONL written by the caller."""
    cfg.validate()
    started = time.perf_counter()
    ctx = prepare_weight(cfg)
    records = _run_trials(ctx, cfg, weight_index)
    deltas = [r.delta for r in records if r.delta is not None]
    ranks = [r.rank for r in records if r.rank is not None]
    violations = _violations(records, ctx, cfg.violation_rtol)
    argmin = min(
        (r.trial for r in records if r.delta is not None),
        key=lambda i: records[i].delta,
        default=None,
    )
    summary = {
        "algebra": cfg.algebra,
        "weight": ctx.wd.spec,
        "trials": cfg.trials,
        "seed": cfg.seed,
        "config_hash": cfg.config_hash(),
        "sample_min_delta": min(deltas) if deltas else None,
        "sample_min_trial": argmin,
        "min_rank": min(ranks) if ranks else None,
        "r_col": ctx.r_col,
        "collinear_delta": ctx.delta_col_pipeline,
        "violations": violations,
        "wall_time_s": time.perf_counter() - started,
    }
    return SampleResult(records, summary, _exit_code(violations))


def write_jsonl(records: list, stream) -> None:
    for record in records:
        stream.write(record.jsonl() + "\n")


class TableRow(NamedTuple):
    weight: str
    sample_min_delta: float
    collinear_delta: float
    r_col: int
    m: int
    n: int
    min_rank: int
    violation: bool


class TableResult(NamedTuple):
    rows: list
    exit_code: int


def run_table1(cfg: ExperimentConfig, weights: tuple = catalog.SL4_SCAN_WEIGHTS) -> TableResult:
    """The full scan: per weight, the sample minimum against the baseline.

    Any row whose sample minimum drops below the baseline (beyond the noise
    slack) is a finding and flips the exit code to 3.
    """
    cfg.validate()
    rows = []
    any_violation = False
    for weight_index, spec in enumerate(weights):
        ctx = prepare_weight(cfg, spec)
        records = _run_trials(ctx, cfg, weight_index)
        deltas = [r.delta for r in records if r.delta is not None]
        ranks = [r.rank for r in records if r.rank is not None]
        sample_min = min(deltas)
        min_rank = min(ranks)
        violation = (
            sample_min < ctx.delta_col_pipeline * (1.0 - cfg.violation_rtol)
            or min_rank < ctx.r_col
        )
        any_violation |= violation
        rows.append(
            TableRow(
                weight=ctx.wd.spec,
                sample_min_delta=sample_min,
                collinear_delta=ctx.delta_col_pipeline,
                r_col=ctx.r_col,
                m=ctx.wd.m,
                n=ctx.wd.n,
                min_rank=min_rank,
                violation=violation,
            )
        )
    return TableResult(rows, EXIT_VIOLATION if any_violation else EXIT_OK)


def write_table_csv(rows: list, stream) -> None:
    """CSV with the fixed header; the weight field is quoted (it contains commas)."""
    import csv

    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["weight", "sample_min_delta", "collinear_delta", "r_col", "m", "n"])
    for row in rows:
        writer.writerow(
            [row.weight, repr(row.sample_min_delta), repr(row.collinear_delta), row.r_col, row.m, row.n]
        )


class HuntResult(NamedTuple):
    report: dict
    exit_code: int


def run_hunt(cfg: ExperimentConfig) -> HuntResult:
    """Simplex-descent minimization of delta with a regularity barrier.

    Nelder-Mead with the classic (1, 2, 0.5, 0.5) moves, an axis-aligned
    initial simplex of the configured scale around a Gaussian start, and a
    hard +inf barrier below the regularity margin.  Restarts use independent
    seeded streams; the best finite minimum is reported.
    """
    cfg.validate()
    ctx = prepare_weight(cfg)
    dim = ctx.rs.rank * 3

    def objective(vec: np.ndarray) -> float:
        x = Configuration.from_coords(ctx.rs, vec.reshape(ctx.rs.rank, 3))
        if regularity_margin(ctx.rs, x).margin < cfg.margin_min:
            return np.inf
        return evaluate_configuration(ctx.rs, ctx.wd, ctx.orbit, x, ctx.r_col).delta

    best = None
    total_nfev = 0
    total_nit = 0
    for restart in range(cfg.restarts):
        rng = trial_generator(cfg.seed, 0xB0B, restart)
        x0 = rng.normal(0.0, cfg.scale, size=dim)
        simplex = np.vstack([x0, x0 + cfg.simplex_scale * np.eye(dim)])
        result = minimize(
            objective,
            x0,
            method="Nelder-Mead",
            options={
                "maxiter": cfg.max_iterations,
                "initial_simplex": simplex,
                "xatol": 1e-8,
                "fatol": 1e-10,
                "adaptive": False,
            },
        )
        total_nfev += int(result.nfev)
        total_nit += int(result.nit)
        if np.isfinite(result.fun) and (best is None or result.fun < best[0]):
            best = (float(result.fun), result.x.copy(), restart)

    if best is None:
        report = {
            "algebra": cfg.algebra,
            "weight": ctx.wd.spec,
            "status": "inconclusive",
            "restarts": cfg.restarts,
            "seed": cfg.seed,
            "config_hash": cfg.config_hash(),
            "evaluations": total_nfev,
            "iterations": total_nit,
        }
        return HuntResult(report, EXIT_OK)

    best_delta, best_vec, best_restart = best
    gap = best_delta - ctx.delta_col_pipeline
    violation = best_delta < ctx.delta_col_pipeline * (1.0 - cfg.violation_rtol)
    report = {
        "algebra": cfg.algebra,
        "weight": ctx.wd.spec,
        "status": "ok",
        "restarts": cfg.restarts,
        "seed": cfg.seed,
        "config_hash": cfg.config_hash(),
        "best_delta": best_delta,
        "collinear_delta": ctx.delta_col_pipeline,
        "gap": gap,
        "violation": violation,
        "best_restart": best_restart,
        "best_coords": best_vec.reshape(ctx.rs.rank, 3).tolist(),
        "evaluations": total_nfev,
        "iterations": total_nit,
    }
    return HuntResult(report, EXIT_VIOLATION if violation else EXIT_OK)


class InvariantsResult(NamedTuple):
    results: list
    exit_code: int


def run_invariants(cfg: ExperimentConfig, profile: str = "full") -> InvariantsResult:
    """The cross-module property suite; any failed check exits nonzero."""
    results = invariants.run_all(seed=cfg.seed, profile=profile)
    ok = all(r.passed for r in results)
    return InvariantsResult(results, EXIT_OK if ok else EXIT_NUMERICAL)
