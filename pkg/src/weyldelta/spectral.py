"""Weighted singular values, numerical rank and the spectral invariant delta.

The coefficient matrix is re-weighted row-wise by inverse square roots of
binomial coefficients before the SVD; that weighting is what makes the
resulting invariant rotation-independent.  delta is the elementary symmetric
polynomial, of degree equal to the collinear rank, of the singular values
scaled back by the same binomial square roots.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .errors import InputError, NumericalFailure
from .hopfmap import ConfMatrix
from .liealg import RootSystem, WeightData, WeylOrbit

logger = logging.getLogger(__name__)

# Standard dense-SVD rank cutoff: sigma > RANK_EPS * sigma_max * max(rows, cols).
RANK_EPS = 2.3e-16
# binom(1020, 510) is the last row that fits in double range.
MAX_DEGREE = 1020
# Successive singular values closer than this (relatively) get a tie note.
TIE_RTOL = 1e-12


@lru_cache(maxsize=None)
def binomial_row(m: int) -> np.ndarray:
    """Row m of Pascal's triangle as a read-only float array.

    Computed in exact integer arithmetic, then rounded once to double.
    """
    if m < 0 or m > MAX_DEGREE:
        raise InputError(f"degree {m} outside supported range 0..{MAX_DEGREE}")
    row = np.array([float(comb(m, i)) for i in range(m + 1)])
    row.setflags(write=False)
    return row


def elementary_symmetric(values: np.ndarray, degree: int) -> float:
    """e_degree of the values, by the product recurrence on (1 + v t).

    Stable for nonnegative inputs: every update adds same-sign terms.
    """
    values = np.asarray(values, dtype=float)
    if degree < 0 or degree > values.size:
        raise InputError(f"degree {degree} out of range 0..{values.size}")
    coeffs = np.zeros(degree + 1)
    coeffs[0] = 1.0
    for v in values:
        coeffs[1:] += v * coeffs[:-1]
    return float(coeffs[degree])


def weighted_singular_values(M: ConfMatrix) -> np.ndarray:
    """Singular values, descending, of the binomially re-weighted matrix.

    Row i is scaled by binom(m, i)^(-1/2).  Per-column phase changes leave
    the result untouched.  SVD non-convergence is reported with the offending
    matrix serialized, since it points at pathological input.
    """
    weights = np.sqrt(binomial_row(M.m))
    scaled = M.entries / weights[:, None]
    try:
        sigma = np.linalg.svd(scaled, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"SVD failed to converge: {exc}; matrix={M.to_json()}") from exc
    _note_ties(sigma)
    return sigma


def _note_ties(sigma: np.ndarray) -> None:
    if sigma.size < 2 or sigma[0] == 0.0:
        return
    gaps = sigma[:-1] - sigma[1:]
    near = (gaps > 0.0) & (gaps < TIE_RTOL * sigma[:-1])
    if np.any(near):
        i = int(np.nonzero(near)[0][0])
        logger.debug(
            "near-tie between singular values %d and %d (gap %.3e); descending "
            "sort breaks the tie", i, i + 1, gaps[i],
        )


def numerical_rank(sigma: np.ndarray, m: int, n: int) -> int:
    """Count of singular values above the dense-SVD threshold."""
    sigma = np.asarray(sigma, dtype=float)
    if sigma.size == 0 or sigma[0] <= 0.0:
        return 0
    return int(np.count_nonzero(sigma > RANK_EPS * sigma[0] * max(m + 1, n)))


def collinear_rank(rs: RootSystem, wd: WeightData, orbit: WeylOrbit) -> int:
    """Rank of the coefficient matrix at any collinear configuration.

    Equals the number of distinct collinear column exponents; cross-checked
    against the numerical rank at the canonical collinear configuration in
    the oracle suite.
    """
    from .oracles import exponent_multiset  # local import: oracles uses this module

    return len(exponent_multiset(rs, wd, orbit).counts)


def delta(M: ConfMatrix, r_col: int) -> float:
    """The spectral invariant: e_{r_col} of the re-scaled singular values.

    Parameters
    ----------
    M : ConfMatrix
    r_col : int
        Collinear rank; must lie in 0..min(m+1, n).

    Returns
    -------
    float
        Nonnegative; strictly positive iff the matrix rank is >= r_col.
    """
    p = min(M.m + 1, M.n)
    if not 0 <= r_col <= p:
        raise InputError(f"r_col={r_col} out of range 0..{p}")
    sigma = weighted_singular_values(M)
    return _delta_from_sigma(sigma, M.m, M.n, r_col)


def _weighted_diagonal(sigma: np.ndarray, m: int, n: int) -> np.ndarray:
    p = min(m + 1, n)
    return np.sqrt(binomial_row(m)[:p]) * sigma[:p]


def _delta_from_sigma(sigma: np.ndarray, m: int, n: int, r_col: int) -> float:
    return elementary_symmetric(_weighted_diagonal(sigma, m, n), r_col)


@dataclass(frozen=True, eq=False)
class SpectralReport:
    """Everything the harness records about one evaluated configuration."""

    singular_values: np.ndarray
    numerical_rank: int
    r_col: int
    delta: float
    weighted_diagonal: np.ndarray

    def __post_init__(self):
        self.singular_values.setflags(write=False)
        self.weighted_diagonal.setflags(write=False)

    def to_json(self) -> str:
        return json.dumps(
            {
                "singular_values": self.singular_values.tolist(),
                "numerical_rank": self.numerical_rank,
                "r_col": self.r_col,
                "delta": self.delta,
                "weighted_diagonal": self.weighted_diagonal.tolist(),
            }
        )


def spectral_report(M: ConfMatrix, r_col: int) -> SpectralReport:
    """Bundle singular values, rank and delta for one matrix."""
    p = min(M.m + 1, M.n)
    if not 0 <= r_col <= p:
        raise InputError(f"r_col={r_col} out of range 0..{p}")
    sigma = weighted_singular_values(M)
    return SpectralReport(
        singular_values=sigma,
        numerical_rank=numerical_rank(sigma, M.m, M.n),
        r_col=r_col,
        delta=_delta_from_sigma(sigma, M.m, M.n, r_col),
        weighted_diagonal=_weighted_diagonal(sigma, M.m, M.n),
    )
