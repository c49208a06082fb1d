"""Independent checks: collinear exponents, closed-form baseline, classical determinant.

At a collinear configuration along a dominant regular axis every column
polynomial collapses to plus-or-minus a monomial, with exponent equal to the
weighted count of positive roots kept positive by the column's orbit
representative.  That combinatorial picture yields a closed form for the
baseline invariant which the numerical pipeline must reproduce, and doubles
as the rank oracle.  A direct implementation of the classical n-point
determinant of Atiyah and Sutcliffe covers the type-A specialization.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .confgeom import Configuration
from .errors import InputError
from .hopfmap import hopf_lift
from .liealg import RootSystem, WeightData, WeylOrbit
from .spectral import binomial_row

# Column polynomials pair point a with unit(x_b - x_a); "inward" flips the
# arrows.  The pin is forced by the type-A equivalence check in the tests.
DIRECTION_CONVENTION = "outward"


@dataclass(frozen=True, eq=False)
class ExponentMultiset:
    """Collinear column exponents c_k with their multiplicities."""

    exponents: tuple
    counts: dict

    @property
    def rank(self) -> int:
        return len(self.counts)


def exponent_multiset(rs: RootSystem, wd: WeightData, orbit: WeylOrbit) -> ExponentMultiset:
    """Per-coset exponents: c_k = sum of multiplicities over roots kept positive.

    Independent of the representative choice, since a stabilizer factor only
    permutes the weighted positive roots among themselves.
    """
    support = wd.support
    sup_roots = rs.positive_roots[support]
    sup_mult = wd.m_alpha[support]
    exponents = []
    for k in range(orbit.n):
        images = orbit.representatives[k] @ sup_roots.T
        c_k = 0
        for j in range(len(support)):
            idx = rs.root_index(images[:, j])
            if rs.is_positive_index(idx):
                c_k += int(sup_mult[j])
        exponents.append(c_k)
    return ExponentMultiset(exponents=tuple(exponents), counts=dict(Counter(exponents)))


def collinear_delta_closed_form(rs: RootSystem, wd: WeightData, orbit: WeylOrbit) -> float:
    """Baseline invariant from the exponent multiset alone.

    A column with exponent c contributes a unit coefficient in row c; the
    re-weighted matrix therefore has one nonzero singular value
    sqrt(mu_c / binom(m, c)) per distinct exponent.  The invariant is the
    full product of those values scaled back by sqrt(binom(m, i-1)).
    """
    ms = exponent_multiset(rs, wd, orbit)
    row = binomial_row(wd.m)
    sigma = np.sort([np.sqrt(mu / row[c]) for c, mu in ms.counts.items()])[::-1]
    scale = np.sqrt(row[: len(sigma)])
    return float(np.prod(scale * sigma))


def points_to_configuration(rs: RootSystem, points: np.ndarray) -> Configuration:
    """Center an n-point tuple and read it as a configuration for type A(n-1)."""
    points = np.asarray(points, dtype=float)
    if not rs.type_label.startswith("A") or points.shape != (rs.ambient_dim, 3):
        raise InputError(
            f"expected {rs.ambient_dim} points in R^3 for {rs.type_label}, "
            f"got shape {points.shape}"
        )
    return Configuration.from_ambient(rs, points - points.mean(axis=0))


def atiyah_sutcliffe_determinant(
    points: np.ndarray, convention: str = DIRECTION_CONVENTION
) -> complex:
    """The classical normalized n-point determinant, up to phase.

    For each point a the degree-(n-1) polynomial multiplies the factors
    u t - v over Hopf lifts (u, v) of the unit directions toward the other
    points; the value is the determinant of the n x n coefficient matrix.
    Its modulus is lift-independent and equals 1 on collinear tuples.
    """
    points = np.asarray(points, dtype=float)
    if points.ndim != 2 or points.shape[1] != 3 or len(points) < 2:
        raise InputError(f"expected at least 2 points in R^3, got shape {points.shape}")
    if convention not in ("outward", "inward"):
        raise InputError(f"unknown direction convention {convention!r}")
    n = len(points)
    columns = np.empty((n, n), dtype=complex)
    for a in range(n):
        coeff = np.ones(1, dtype=complex)
        for b in range(n):
            if b == a:
                continue
            d = points[b] - points[a] if convention == "outward" else points[a] - points[b]
            norm = np.linalg.norm(d)
            if not norm > 0.0:
                raise InputError(f"points {a} and {b} coincide")
            u, v = hopf_lift(d / norm)
            coeff = np.convolve(coeff, np.array([-v, u]))
        columns[:, a] = coeff
    return complex(np.linalg.det(columns))
