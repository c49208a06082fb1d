"""Cross-module property suite with measured worst-case deviations.

Each check draws its randomness from a stream derived from (seed, check tag),
so the suite is reproducible as a whole and check by check.  The "full"
profile uses the sample sizes the package is validated against; "fast" is a
smoke-test profile for quick runs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import catalog
from .confgeom import (
    canonical_collinear,
    collinear_configuration,
    group_action,
    random_regular_vector,
    random_rotation,
    sample_configuration,
)
from .hopfmap import assemble_F, build_lift_table, hopf_lift, hopf_project
from .liealg import WeylOrbit, parse_weight, root_system, stabilizer_elements, weyl_orbit
from .oracles import (
    atiyah_sutcliffe_determinant,
    collinear_delta_closed_form,
    points_to_configuration,
)
from .pipeline import evaluate_configuration
from .spectral import collinear_rank, spectral_report


@dataclass
class CheckResult:
    name: str
    worst: float
    threshold: float
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  ({self.detail})" if self.detail else ""
        return f"{status}  {self.name:<24} worst={self.worst:.3e}  threshold={self.threshold:.1e}{extra}"


def _rng(seed: int, tag: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(0xFACE, tag)))


def _context(weight_spec: str, algebra: str = "A3"):
    rs = root_system(algebra)
    wd = parse_weight(rs, weight_spec)
    orbit = weyl_orbit(rs, wd)
    return rs, wd, orbit, collinear_rank(rs, wd, orbit)


def check_hopf_roundtrip(seed: int = 0, count: int = 100_000) -> CheckResult:
    """Lift-then-project must return the input direction."""
    rng = _rng(seed, 1)
    vecs = rng.normal(size=(count, 3))
    vecs /= np.linalg.norm(vecs, axis=1)[:, None]
    worst = 0.0
    for w in vecs:
        u, v = hopf_lift(w)
        dev = max(
            float(np.max(np.abs(hopf_project(u, v) - w))),
            abs(abs(u) ** 2 + abs(v) ** 2 - 1.0),
        )
        if dev > worst:
            worst = dev
    return CheckResult("hopf_roundtrip", worst, 1e-12, worst < 1e-12, f"{count} directions")


def check_phase_gauge(seed: int = 0, configs: int = 5) -> CheckResult:
    """Rephasing any lift may only rephase columns: spectra stay put."""
    worst = 0.0
    for wi, spec in enumerate(catalog.INVARIANCE_TEST_WEIGHTS):
        rs, wd, orbit, r_col = _context(spec)
        rng = _rng(seed, 100 + wi)
        for _ in range(configs):
            x = sample_configuration(rs, rng)
            lifts = build_lift_table(rs, x)
            base = spectral_report(assemble_F(rs, wd, orbit, lifts), r_col)
            phases = np.exp(2j * np.pi * rng.uniform(size=len(lifts.lifts)))
            twisted = spectral_report(assemble_F(rs, wd, orbit, lifts.with_phases(phases)), r_col)
            worst = max(
                worst,
                abs(twisted.delta - base.delta) / base.delta,
                float(
                    np.max(
                        np.abs(twisted.singular_values - base.singular_values)
                        / base.singular_values[0]
                    )
                ),
            )
    return CheckResult("phase_gauge", worst, 1e-10, worst < 1e-10)


def _orbit_with_alternative_reps(orbit: WeylOrbit, rng: np.random.Generator) -> WeylOrbit:
    rs = orbit.root_system
    stab = stabilizer_elements(rs, orbit.elements[0])
    reps = np.array(
        [orbit.representatives[k] @ stab[rng.integers(len(stab))] for k in range(orbit.n)]
    )
    return WeylOrbit(
        root_system=rs,
        elements=orbit.elements.copy(),
        representatives=reps,
        stabilizer_order=orbit.stabilizer_order,
        group_order=orbit.group_order,
        _element_index=dict(orbit._element_index),
    )


def check_representative_choice(seed: int = 0, configs: int = 3) -> CheckResult:
    """Columns must agree up to phase when coset representatives are swapped."""
    worst = 0.0
    for wi, spec in enumerate(("[1,0,0,0]", "[1,1,0,0]", "[2,2,0,0]")):
        rs, wd, orbit, _ = _context(spec)
        rng = _rng(seed, 200 + wi)
        alt = _orbit_with_alternative_reps(orbit, rng)
        for _ in range(configs):
            x = sample_configuration(rs, rng)
            lifts = build_lift_table(rs, x)
            f1 = assemble_F(rs, wd, orbit, lifts).entries
            f2 = assemble_F(rs, wd, alt, lifts).entries
            overlap = np.abs(np.sum(np.conj(f1) * f2, axis=0))
            overlap /= np.linalg.norm(f1, axis=0) * np.linalg.norm(f2, axis=0)
            worst = max(worst, float(np.max(np.abs(overlap - 1.0))))
    return CheckResult("representative_choice", worst, 1e-10, worst < 1e-10)


def check_su2_invariance(seed: int = 0, rotations: int = 100) -> CheckResult:
    """delta must not move under rotations of the R^3 factor."""
    worst = 0.0
    for wi, spec in enumerate(catalog.INVARIANCE_TEST_WEIGHTS):
        rs, wd, orbit, r_col = _context(spec)
        rng = _rng(seed, 300 + wi)
        x = sample_configuration(rs, rng)
        base = evaluate_configuration(rs, wd, orbit, x, r_col).delta
        for _ in range(rotations):
            rot = random_rotation(rng)
            moved = evaluate_configuration(rs, wd, orbit, group_action(x, rotation=rot), r_col)
            worst = max(worst, abs(moved.delta - base) / base)
    return CheckResult("su2_invariance", worst, 1e-8, worst < 1e-8, f"{rotations} rotations/weight")


def check_weyl_invariance(seed: int = 0) -> CheckResult:
    """delta must not move under the Weyl action on the span factor."""
    from .liealg import reflection_matrix

    worst = 0.0
    for wi, spec in enumerate(catalog.INVARIANCE_TEST_WEIGHTS):
        rs, wd, orbit, r_col = _context(spec)
        rng = _rng(seed, 400 + wi)
        x = sample_configuration(rs, rng)
        base = evaluate_configuration(rs, wd, orbit, x, r_col).delta
        for alpha in rs.simple_roots:
            moved = group_action(x, weyl=reflection_matrix(alpha))
            dev = abs(evaluate_configuration(rs, wd, orbit, moved, r_col).delta - base) / base
            worst = max(worst, dev)
    return CheckResult("weyl_invariance", worst, 1e-8, worst < 1e-8, "all simple reflections")


def check_scale_invariance(seed: int = 0) -> CheckResult:
    """Scaling a configuration leaves every unit direction, hence delta, fixed."""
    worst = 0.0
    for wi, spec in enumerate(catalog.INVARIANCE_TEST_WEIGHTS):
        rs, wd, orbit, r_col = _context(spec)
        rng = _rng(seed, 500 + wi)
        x = sample_configuration(rs, rng)
        base = evaluate_configuration(rs, wd, orbit, x, r_col).delta
        for c in (0.5, 3.0, 100.0):
            moved = evaluate_configuration(rs, wd, orbit, group_action(x, scale=c), r_col)
            worst = max(worst, abs(moved.delta - base) / base)
    return CheckResult("scale_invariance", worst, 1e-10, worst < 1e-10, "c in {0.5, 3, 100}")


def check_collinear_constancy(seed: int = 0, configs: int = 50) -> CheckResult:
    """delta takes one value on the whole collinear class."""
    worst = 0.0
    for wi, spec in enumerate(("[2,1,0,0]", "[1,1,0,0]")):
        rs, wd, orbit, r_col = _context(spec)
        rng = _rng(seed, 600 + wi)
        base = evaluate_configuration(rs, wd, orbit, canonical_collinear(rs), r_col).delta
        for _ in range(configs):
            xi = random_regular_vector(rs, rng)
            direction = rng.normal(size=3)
            direction /= np.linalg.norm(direction)
            x = collinear_configuration(rs, xi, direction)
            dev = abs(evaluate_configuration(rs, wd, orbit, x, r_col).delta - base) / base
            worst = max(worst, dev)
    return CheckResult("collinear_constancy", worst, 1e-8, worst < 1e-8, f"{configs} configs/weight")


def check_oracle_agreement() -> CheckResult:
    """Closed-form baseline and ranks must match the numerical pipeline."""
    worst = 0.0
    mismatches = 0
    for spec in catalog.SL4_SCAN_WEIGHTS:
        rs, wd, orbit, r_col = _context(spec)
        closed = collinear_delta_closed_form(rs, wd, orbit)
        report = evaluate_configuration(rs, wd, orbit, canonical_collinear(rs), r_col)
        worst = max(worst, abs(report.delta - closed) / closed)
        if report.numerical_rank != r_col:
            mismatches += 1
    passed = worst < 1e-9 and mismatches == 0
    return CheckResult(
        "oracle_agreement", worst, 1e-9, passed, f"26 weights, {mismatches} rank mismatches"
    )


def check_as_equivalence(seed: int = 0, configs: int = 100) -> CheckResult:
    """Type-A specialization: delta equals the classical determinant modulus."""
    worst = 0.0
    for ai, npoints in enumerate((3, 4)):
        algebra = f"A{npoints - 1}"
        weight = "[" + ",".join(["1"] * (npoints - 1)) + ",0]"
        rs, wd, orbit, r_col = _context(weight, algebra)
        rng = _rng(seed, 700 + ai)
        for _ in range(configs):
            points = rng.normal(size=(npoints, 3))
            dlt = evaluate_configuration(
                rs, wd, orbit, points_to_configuration(rs, points), r_col
            ).delta
            det = abs(atiyah_sutcliffe_determinant(points))
            worst = max(worst, abs(dlt - det) / dlt)
    return CheckResult("as_equivalence", worst, 1e-8, worst < 1e-8, f"{configs} configs/type")


def check_a1_exactness(seed: int = 0, configs: int = 1000) -> CheckResult:
    """For A1 with the fundamental weight, delta is identically 1 and rank 2."""
    rs, wd, orbit, r_col = _context("fund:1", "A1")
    rng = _rng(seed, 800)
    worst = 0.0
    rank_bad = 0
    for _ in range(configs):
        report = evaluate_configuration(rs, wd, orbit, sample_configuration(rs, rng), r_col)
        worst = max(worst, abs(report.delta - 1.0))
        if report.numerical_rank != 2:
            rank_bad += 1
    passed = worst < 1e-10 and rank_bad == 0
    return CheckResult("a1_exactness", worst, 1e-10, passed, f"{configs} configs, {rank_bad} rank errors")


_PROFILES = {
    "full": dict(hopf=100_000, su2=100, collinear=50, as_eq=100, a1=1000),
    "fast": dict(hopf=2_000, su2=10, collinear=10, as_eq=10, a1=50),
}


def run_all(seed: int = 0, profile: str = "full") -> list[CheckResult]:
    """Run every check; returns one result per check, in a fixed order."""
    sizes = _PROFILES[profile]
    return [
        check_hopf_roundtrip(seed, count=sizes["hopf"]),
        check_phase_gauge(seed),
        check_representative_choice(seed),
        check_su2_invariance(seed, rotations=sizes["su2"]),
        check_weyl_invariance(seed),
        check_scale_invariance(seed),
        check_collinear_constancy(seed, configs=sizes["collinear"]),
        check_oracle_agreement(),
        check_as_equivalence(seed, configs=sizes["as_eq"]),
        check_a1_exactness(seed, configs=sizes["a1"]),
    ]
