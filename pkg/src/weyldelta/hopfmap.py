"""Hopf lifts of unit root directions and assembly of the coefficient matrix.

The Hopf map sends (u, v) on the unit sphere of C^2 to
(2 u conj(v), |u|^2 - |v|^2) on S^2, read as (complex, real) coordinates.
Each root direction gets one deterministic lift, shared by every column
that references the root, so the per-column ambiguity stays a single phase.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .confgeom import Configuration, regularity_margin
from .errors import InputError, NumericalFailure
from .liealg import RootSystem, WeightData, WeylOrbit

LIFT_UNIT_TOL = 1e-9


def hopf_lift(w: np.ndarray) -> tuple[complex, complex]:
    """A deterministic Hopf lift of a unit vector in R^3.

    Writing zeta = w[0] + i w[1] and z = w[2], the branch keeps the
    denominator at least sqrt(2):

        z >= 0:  u = sqrt((1+z)/2),            v = conj(zeta)/sqrt(2(1+z))
        z <  0:  u = zeta/sqrt(2(1-z)),        v = sqrt((1-z)/2)

    Both satisfy 2 u conj(v) = zeta and |u|^2 - |v|^2 = z.
    """
    w = np.asarray(w, dtype=float)
    if w.shape != (3,) or abs(np.linalg.norm(w) - 1.0) > LIFT_UNIT_TOL:
        raise InputError(f"hopf_lift needs a unit vector in R^3, got {w.tolist()}")
    zeta = complex(w[0], w[1])
    z = float(w[2])
    if z >= 0.0:
        u = complex(np.sqrt((1.0 + z) / 2.0))
        v = zeta.conjugate() / np.sqrt(2.0 * (1.0 + z))
    else:
        v = complex(np.sqrt((1.0 - z) / 2.0))
        u = zeta / np.sqrt(2.0 * (1.0 - z))
    return u, v


def hopf_project(u: complex, v: complex) -> np.ndarray:
    """The Hopf map itself, for round-trip checks."""
    zeta = 2.0 * u * np.conj(v)
    return np.array([zeta.real, zeta.imag, abs(u) ** 2 - abs(v) ** 2])


@dataclass(frozen=True, eq=False)
class LiftTable:
    """One Hopf lift per root, aligned with ``RootSystem.all_roots``."""

    lifts: np.ndarray       # (2*npos, 2) complex rows (u, v)
    directions: np.ndarray  # (2*npos, 3) unit root directions

    def __post_init__(self):
        self.lifts.setflags(write=False)
        self.directions.setflags(write=False)

    def lift(self, index: int) -> tuple[complex, complex]:
        u, v = self.lifts[index]
        return complex(u), complex(v)

    def with_phases(self, phases: np.ndarray) -> "LiftTable":
        """Rephased copy: row i multiplied by phases[i] (gauge moves only)."""
        phases = np.asarray(phases)
        return LiftTable(lifts=self.lifts * phases[:, None], directions=self.directions.copy())


def build_lift_table(rs: RootSystem, x: Configuration) -> LiftTable:
    """Normalize every root pairing and lift it once.

    Rejects configurations outside the regular locus (margin 0).
    """
    report = regularity_margin(rs, x)
    if not report.margin > 0.0:
        raise InputError(
            f"configuration is not regular: root {report.root.tolist()} pairs to zero"
        )
    pairings = rs.all_roots @ x.ambient
    norms = np.linalg.norm(pairings, axis=1)
    directions = pairings / norms[:, None]
    lifts = np.empty((len(directions), 2), dtype=complex)
    for i, w in enumerate(directions):
        lifts[i] = hopf_lift(w)
    return LiftTable(lifts=lifts, directions=directions)


@dataclass(frozen=True, eq=False)
class ConfMatrix:
    """The (m+1) x n complex coefficient matrix of the n column polynomials.

    Entry (i, k) is the coefficient of t^i in the k-th column polynomial.
    Columns are defined up to individual phases.
    """

    entries: np.ndarray
    m: int
    n: int
    provenance: str = ""

    def __post_init__(self):
        self.entries.setflags(write=False)

    def to_json(self) -> str:
        pairs = np.stack([self.entries.real, self.entries.imag], axis=-1)
        return json.dumps({"m": self.m, "n": self.n, "entries": pairs.tolist()})

    @classmethod
    def from_json(cls, text: str) -> "ConfMatrix":
        obj = json.loads(text)
        pairs = np.array(obj["entries"], dtype=float)
        return cls(entries=pairs[..., 0] + 1j * pairs[..., 1], m=int(obj["m"]), n=int(obj["n"]))


def assemble_F(
    rs: RootSystem,
    wd: WeightData,
    orbit: WeylOrbit,
    lifts: LiftTable,
    provenance: str = "",
) -> ConfMatrix:
    """Expand the n column polynomials into an (m+1) x n coefficient matrix.

    Column k is the product over weighted positive roots alpha of
    (u t - v)^(m_alpha), where (u, v) is the stored lift of the image of
    alpha under the k-th orbit representative.  Expansion is by sequential
    convolution of the degree-1 factors; the formal degree stays m even when
    leading coefficients vanish.
    """
    support = wd.support
    sup_roots = rs.positive_roots[support]
    sup_mult = wd.m_alpha[support]
    columns = np.empty((orbit.n, wd.m + 1), dtype=complex)
    for k in range(orbit.n):
        images = orbit.representatives[k] @ sup_roots.T  # (N, s)
        coeff = np.ones(1, dtype=complex)
        for j in range(len(support)):
            idx = rs.root_index(images[:, j])
            u, v = lifts.lifts[idx]
            factor = np.array([-v, u])
            for _ in range(int(sup_mult[j])):
                coeff = np.convolve(coeff, factor)
        if coeff.size != wd.m + 1:
            raise NumericalFailure(
                f"column {k} expanded to degree {coeff.size - 1}, expected {wd.m}"
            )
        columns[k] = coeff
    return ConfMatrix(entries=columns.T.copy(), m=wd.m, n=orbit.n, provenance=provenance)
