"""End-to-end evaluation of one configuration: lifts, matrix, spectral report."""

from __future__ import annotations

from .confgeom import Configuration
from .hopfmap import ConfMatrix, assemble_F, build_lift_table
from .liealg import RootSystem, WeightData, WeylOrbit
from .spectral import SpectralReport, collinear_rank, spectral_report


def conf_matrix(
    rs: RootSystem,
    wd: WeightData,
    orbit: WeylOrbit,
    x: Configuration,
    provenance: str = "",
) -> ConfMatrix:
    """Hopf lifts plus column assembly for one configuration."""
    return assemble_F(rs, wd, orbit, build_lift_table(rs, x), provenance=provenance)


def evaluate_configuration(
    rs: RootSystem,
    wd: WeightData,
    orbit: WeylOrbit,
    x: Configuration,
    r_col: int | None = None,
) -> SpectralReport:
    """Full pipeline: configuration to spectral report.

    ``r_col`` may be passed in when precomputed (it depends only on the
    weight, not on the configuration).
    """
    if r_col is None:
        r_col = collinear_rank(rs, wd, orbit)
    return spectral_report(conf_matrix(rs, wd, orbit, x), r_col)
