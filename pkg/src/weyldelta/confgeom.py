"""Configurations of rank-many points in R^3 attached to a root system.

A configuration is an element of span(R) tensor R^3.  It is stored twice:
as an (rank x 3) coordinate matrix over a fixed orthonormal basis of
span(R) (the Gram-Schmidt basis of the simple roots), and as the
reconstructed (ambient_dim x 3) matrix used for pairing with roots.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .liealg import RootSystem

DEFAULT_MARGIN_MIN = 1e-12
ORTHOGONALITY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Configuration:
    """An element of span(R) tensor R^3.

    ``ambient`` always equals ``basis.T @ coords``, so it lies in the span of
    the roots exactly as far as floating arithmetic allows.
    """

    coords: np.ndarray   # (rank, 3)
    ambient: np.ndarray  # (ambient_dim, 3)
    basis: np.ndarray    # (rank, ambient_dim), orthonormal rows

    def __post_init__(self):
        for arr in (self.coords, self.ambient, self.basis):
            arr.setflags(write=False)

    @classmethod
    def from_coords(cls, rs: RootSystem, coords: np.ndarray) -> "Configuration":
        coords = np.array(coords, dtype=float)
        if coords.shape != (rs.rank, 3):
            raise InputError(
                f"coordinates must have shape ({rs.rank}, 3), got {coords.shape}"
            )
        return cls(coords=coords, ambient=rs.span_basis.T @ coords, basis=rs.span_basis)

    @classmethod
    def from_ambient(cls, rs: RootSystem, ambient: np.ndarray) -> "Configuration":
        """Project an (ambient_dim x 3) matrix onto span(R) and wrap it."""
        ambient = np.asarray(ambient, dtype=float)
        if ambient.shape != (rs.ambient_dim, 3):
            raise InputError(
                f"ambient matrix must have shape ({rs.ambient_dim}, 3), got {ambient.shape}"
            )
        coords = rs.span_basis @ ambient
        return cls.from_coords(rs, coords)

    def to_json(self) -> str:
        """Serialize as a JSON array of rank rows times 3 columns."""
        return json.dumps(self.coords.tolist())

    @classmethod
    def from_json(cls, rs: RootSystem, text: str) -> "Configuration":
        return cls.from_coords(rs, np.array(json.loads(text), dtype=float))


@dataclass(frozen=True, eq=False)
class RegularityReport:
    """Distance of a configuration from the non-regular locus."""

    margin: float
    root: np.ndarray
    root_index: int


def pair_root(x: Configuration, alpha: np.ndarray) -> np.ndarray:
    """Apply (alpha tensor identity) to the configuration: a vector in R^3."""
    return np.asarray(alpha, dtype=float) @ x.ambient


def regularity_margin(rs: RootSystem, x: Configuration) -> RegularityReport:
    """Smallest norm of a root pairing; positive iff the configuration is regular."""
    pairings = rs.positive_roots @ x.ambient  # (npos, 3)
    norms = np.linalg.norm(pairings, axis=1)
    worst = int(np.argmin(norms))
    return RegularityReport(
        margin=float(norms[worst]), root=rs.positive_roots[worst], root_index=worst
    )


def sample_configuration(
    rs: RootSystem,
    rng: np.random.Generator,
    scale: float = 1.0,
    margin_min: float = DEFAULT_MARGIN_MIN,
    max_attempts: int = 100,
) -> Configuration:
    """Draw coordinates i.i.d. normal(0, scale), rejecting sub-margin draws.

    Deterministic given the generator state.  One hundred consecutive
    rejections indicate a misconfigured ``margin_min`` and raise.
    """
    if not scale > 0:
        raise InputError(f"scale must be positive, got {scale}")
    for _ in range(max_attempts):
        x = Configuration.from_coords(rs, rng.normal(0.0, scale, size=(rs.rank, 3)))
        if regularity_margin(rs, x).margin > margin_min:
            return x
    raise InputError(
        f"no sample exceeded margin_min={margin_min} in {max_attempts} attempts; "
        "margin_min is set too high for this scale"
    )


def collinear_configuration(
    rs: RootSystem, xi: np.ndarray, direction: np.ndarray
) -> Configuration:
    """The configuration xi tensor direction  (all points on one line).

    ``xi`` must be regular: no positive root may pair to zero with it.
    """
    xi = np.asarray(xi, dtype=float)
    direction = np.asarray(direction, dtype=float)
    if abs(np.linalg.norm(direction) - 1.0) > 1e-9:
        raise InputError("direction must be a unit vector in R^3")
    pairings = rs.positive_roots @ xi
    scale = np.linalg.norm(xi) if np.linalg.norm(xi) > 0 else 1.0
    dead = np.nonzero(np.abs(pairings) <= 1e-12 * scale)[0]
    if dead.size:
        raise InputError(
            f"xi is not regular: root {rs.positive_roots[dead[0]].tolist()} pairs to zero"
        )
    return Configuration.from_ambient(rs, np.outer(xi, direction))


def canonical_collinear(rs: RootSystem) -> Configuration:
    """The baseline collinear configuration: rho tensor e3."""
    return collinear_configuration(rs, rs.rho, np.array([0.0, 0.0, 1.0]))


def group_action(
    x: Configuration,
    rotation: np.ndarray | None = None,
    weyl: np.ndarray | None = None,
    scale: float | None = None,
) -> Configuration:
    """Apply exactly one of the three actions preserving the configuration space.

    Rotations act on the R^3 factor, Weyl representative matrices on the
    span(R) factor, positive scalars multiply everything.  The regularity
    margin is invariant under rotations, permuted-invariant under Weyl maps
    and multiplied by the factor under scaling.
    """
    given = [v is not None for v in (rotation, weyl, scale)]
    if sum(given) != 1:
        raise InputError("pass exactly one of rotation=, weyl=, scale=")
    if rotation is not None:
        rot = np.asarray(rotation, dtype=float)
        if rot.shape != (3, 3):
            raise InputError("rotation must be a 3x3 matrix")
        if np.max(np.abs(rot.T @ rot - np.eye(3))) > ORTHOGONALITY_TOL:
            raise InputError("rotation is not orthogonal within 1e-12")
        if abs(np.linalg.det(rot) - 1.0) > ORTHOGONALITY_TOL:
            raise InputError("rotation must have determinant +1")
        return Configuration(coords=x.coords @ rot.T, ambient=x.ambient @ rot.T, basis=x.basis)
    if weyl is not None:
        w = np.asarray(weyl, dtype=float)
        dim = x.ambient.shape[0]
        if w.shape != (dim, dim):
            raise InputError(f"weyl map must be a {dim}x{dim} ambient matrix")
        if np.max(np.abs(w.T @ w - np.eye(dim))) > 1e-9:
            raise InputError("weyl map is not orthogonal")
        coords = x.basis @ (w @ x.ambient)
        return Configuration(coords=coords, ambient=x.basis.T @ coords, basis=x.basis)
    if not scale > 0:
        raise InputError(f"scale must be positive, got {scale}")
    return Configuration(coords=x.coords * scale, ambient=x.ambient * scale, basis=x.basis)


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    """Uniform random rotation matrix from a normalized quaternion."""
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    w, xq, yq, zq = q
    return np.array(
        [
            [1 - 2 * (yq * yq + zq * zq), 2 * (xq * yq - zq * w), 2 * (xq * zq + yq * w)],
            [2 * (xq * yq + zq * w), 1 - 2 * (xq * xq + zq * zq), 2 * (yq * zq - xq * w)],
            [2 * (xq * zq - yq * w), 2 * (yq * zq + xq * w), 1 - 2 * (xq * xq + yq * yq)],
        ]
    )


def random_regular_vector(
    rs: RootSystem, rng: np.random.Generator, min_pairing: float = 1e-6
) -> np.ndarray:
    """A random vector in span(R) with all root pairings bounded away from 0."""
    for _ in range(100):
        xi = rng.normal(size=rs.rank) @ rs.span_basis
        if np.min(np.abs(rs.positive_roots @ xi)) > min_pairing * np.linalg.norm(xi):
            return xi
    raise InputError("failed to draw a regular vector; min_pairing too large")
