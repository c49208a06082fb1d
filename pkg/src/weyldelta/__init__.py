"""Spectral invariants of root-system point configurations.

From a simple Lie type and a dominant integral weight, build the complex
coefficient matrix attached to a configuration of rank-many points in R^3
(via Hopf lifts of the root directions), compute its binomially weighted
singular-value invariant, and compare against the collinear baseline.
"""

from .confgeom import (
    Configuration,
    RegularityReport,
    canonical_collinear,
    collinear_configuration,
    group_action,
    pair_root,
    regularity_margin,
    sample_configuration,
)
from .errors import GuardExceeded, InputError, NumericalFailure
from .harness import ExperimentConfig, TrialRecord, run_hunt, run_info, run_invariants, run_sample, run_table1
from .hopfmap import ConfMatrix, LiftTable, assemble_F, build_lift_table, hopf_lift, hopf_project
from .liealg import (
    RootSystem,
    WeightData,
    WeylOrbit,
    act_on_root,
    build_root_system,
    parse_weight,
    root_system,
    weyl_orbit,
)
from .oracles import (
    ExponentMultiset,
    atiyah_sutcliffe_determinant,
    collinear_delta_closed_form,
    exponent_multiset,
    points_to_configuration,
)
from .pipeline import conf_matrix, evaluate_configuration
from .spectral import (
    SpectralReport,
    collinear_rank,
    delta,
    numerical_rank,
    spectral_report,
    weighted_singular_values,
)

__version__ = "0.1.0"

__all__ = [
    "Configuration",
    "ConfMatrix",
    "ExperimentConfig",
    "ExponentMultiset",
    "GuardExceeded",
    "InputError",
    "LiftTable",
    "NumericalFailure",
    "RegularityReport",
    "RootSystem",
    "SpectralReport",
    "TrialRecord",
    "WeightData",
    "WeylOrbit",
    "act_on_root",
    "assemble_F",
    "atiyah_sutcliffe_determinant",
    "build_lift_table",
    "build_root_system",
    "canonical_collinear",
    "collinear_configuration",
    "collinear_delta_closed_form",
    "collinear_rank",
    "conf_matrix",
    "delta",
    "evaluate_configuration",
    "exponent_multiset",
    "group_action",
    "hopf_lift",
    "hopf_project",
    "numerical_rank",
    "pair_root",
    "parse_weight",
    "points_to_configuration",
    "regularity_margin",
    "root_system",
    "run_hunt",
    "run_info",
    "run_invariants",
    "run_sample",
    "run_table1",
    "sample_configuration",
    "spectral_report",
    "weighted_singular_values",
    "weyl_orbit",
]
