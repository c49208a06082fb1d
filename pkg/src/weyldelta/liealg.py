"""Root systems, dominant integral weights and Weyl orbits in ambient coordinates.

All vectors live in an ambient Euclidean space R^N and the invariant bilinear
form is the plain dot product.  Every quantity consumed downstream (coroot
pairings, unit directions, reflections) is invariant under positive rescaling
of the form, so nothing depends on a particular normalization.

Roots are enumerated by closing the simple roots under simple reflections and
sorting lexicographically, so the whole construction is reproducible run to
run.  Root and weight coordinates in these embeddings are rationals with
small denominators; closure arithmetic is exact in double precision.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import NamedTuple

import numpy as np

from .errors import GuardExceeded, InputError, NumericalFailure

DEFAULT_MAX_WEYL_ORDER = 1_000_000

# Root images under orthogonal maps are snapped back onto the root list.
ROOT_MATCH_TOL = 1e-9
# Weight entries / coroot pairings must be integers up to this.
INTEGRALITY_TOL = 1e-9

_EXCEPTIONAL_ORDERS = {
    ("E", 6): 51_840,
    ("E", 7): 2_903_040,
    ("E", 8): 696_729_600,
    ("F", 4): 1_152,
    ("G", 2): 12,
}

_VALID_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 4,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


def weyl_group_order(type_letter: str, rank: int) -> int:
    """Order of the Weyl group of the given simple type."""
    if type_letter == "A":
        return factorial(rank + 1)
    if type_letter in ("B", "C"):
        return 2**rank * factorial(rank)
    if type_letter == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return _EXCEPTIONAL_ORDERS[(type_letter, rank)]


def _simple_roots(type_letter: str, rank: int) -> np.ndarray:
    """Simple roots in the standard (Bourbaki) ambient coordinates."""
    if type_letter == "A":
        n = rank + 1
        rows = [np.eye(n)[i] - np.eye(n)[i + 1] for i in range(rank)]
        return np.array(rows)
    if type_letter in ("B", "C", "D"):
        n = rank
        rows = [np.eye(n)[i] - np.eye(n)[i + 1] for i in range(rank - 1)]
        if type_letter == "B":
            rows.append(np.eye(n)[rank - 1])
        elif type_letter == "C":
            rows.append(2.0 * np.eye(n)[rank - 1])
        else:
            rows.append(np.eye(n)[rank - 2] + np.eye(n)[rank - 1])
        return np.array(rows)
    if type_letter == "G":
        return np.array([[1.0, -1.0, 0.0], [-2.0, 1.0, 1.0]])
    if type_letter == "F":
        return np.array(
            [
                [0.0, 1.0, -1.0, 0.0],
                [0.0, 0.0, 1.0, -1.0],
                [0.0, 0.0, 0.0, 1.0],
                [0.5, -0.5, -0.5, -0.5],
            ]
        )
    # E6/E7/E8: leading simple roots of the E8 chain, ambient dimension 8.
    e8 = np.zeros((8, 8))
    e8[0] = [0.5, -0.5, -0.5, -0.5, -0.5, -0.5, -0.5, 0.5]
    e8[1] = [1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]
    for i in range(2, 8):
        e8[i, i - 2] = -1.0
        e8[i, i - 1] = 1.0
    return e8[:rank].copy()


def reflection_matrix(alpha: np.ndarray) -> np.ndarray:
    """Orthogonal reflection in the hyperplane normal to ``alpha``."""
    alpha = np.asarray(alpha, dtype=float)
    return np.eye(alpha.size) - 2.0 * np.outer(alpha, alpha) / (alpha @ alpha)


def _key(vec: np.ndarray) -> tuple:
    # Coordinates are rationals with denominator << 2^10, so rounding to
    # 9 decimals cannot collide across distinct roots/weights.
    rounded = np.round(vec, 9) + 0.0  # normalize -0.0
    return tuple(rounded.tolist())


def _close_under_reflections(simple: np.ndarray) -> np.ndarray:
    gens = [reflection_matrix(a) for a in simple]
    vectors = [np.asarray(a, dtype=float) for a in simple]
    seen = {_key(v) for v in vectors}
    head = 0
    while head < len(vectors):
        v = vectors[head]
        head += 1
        for g in gens:
            image = g @ v
            k = _key(image)
            if k not in seen:
                seen.add(k)
                vectors.append(image)
    return np.array(vectors)


class RootImage(NamedTuple):
    """A root image snapped onto the root list, with its half-space sign."""

    vector: np.ndarray
    index: int
    positive: bool


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Root data of a simple type, realized in ambient Euclidean coordinates.

    ``positive_roots`` is sorted lexicographically and ``all_roots`` stacks
    the positives followed by their negatives, so indices below
    ``len(positive_roots)`` are exactly the positive half.
    """

    type_label: str
    rank: int
    ambient_dim: int
    simple_roots: np.ndarray
    positive_roots: np.ndarray
    all_roots: np.ndarray
    weyl_order: int
    span_basis: np.ndarray  # orthonormal rows spanning span(R)
    _index: dict = field(repr=False)

    def __post_init__(self):
        for arr in (self.simple_roots, self.positive_roots, self.all_roots, self.span_basis):
            arr.setflags(write=False)

    @property
    def npos(self) -> int:
        return len(self.positive_roots)

    def inner(self, u: np.ndarray, v: np.ndarray) -> float:
        """The invariant form: ambient Euclidean dot product."""
        return float(np.dot(u, v))

    def coroot_pairing(self, alpha: np.ndarray, v: np.ndarray) -> float:
        """2 (alpha, v) / (alpha, alpha)."""
        return 2.0 * float(np.dot(alpha, v)) / float(np.dot(alpha, alpha))

    @property
    def rho(self) -> np.ndarray:
        """Half the sum of the positive roots (dominant and regular)."""
        return 0.5 * self.positive_roots.sum(axis=0)

    def root_index(self, vec: np.ndarray, tol: float = ROOT_MATCH_TOL) -> int:
        """Index of ``vec`` in ``all_roots``, snapping within ``tol``."""
        idx = self._index.get(_key(vec))
        if idx is not None:
            return idx
        dists = np.linalg.norm(self.all_roots - np.asarray(vec, dtype=float), axis=1)
        nearest = int(np.argmin(dists))
        if dists[nearest] <= tol:
            return nearest
        raise NumericalFailure(
            f"vector {np.asarray(vec).tolist()} does not match any root of "
            f"{self.type_label} within {tol}"
        )

    def is_positive_index(self, index: int) -> bool:
        return index < self.npos


def _span_basis(simple: np.ndarray) -> np.ndarray:
    """Deterministic Gram-Schmidt of the simple roots, orthonormal rows."""
    basis = []
    for row in simple:
        v = row.astype(float).copy()
        for b in basis:
            v -= (v @ b) * b
        norm = np.linalg.norm(v)
        if norm < 1e-12:
            raise NumericalFailure("simple roots are not linearly independent")
        basis.append(v / norm)
    return np.array(basis)


def build_root_system(
    type_letter: str,
    rank: int,
    max_weyl_order: int = DEFAULT_MAX_WEYL_ORDER,
) -> RootSystem:
    """Construct the root system of a simple type.

    Parameters
    ----------
    type_letter : str
        One of "A".."G".
    rank : int
        Rank of the type; validity depends on the letter (A: r>=1, B/C: r>=2,
        D: r>=4, E: 6..8, F: 4, G: 2).
    max_weyl_order : int
        Guard on the Weyl group order; types above it are rejected (E7 and E8
        exceed the default of 10**6).
    """
    letter = str(type_letter).upper()
    if letter not in _VALID_RANKS:
        raise InputError(f"unknown type letter {type_letter!r}; expected A..G")
    if not isinstance(rank, (int, np.integer)) or not _VALID_RANKS[letter](int(rank)):
        raise InputError(f"invalid rank {rank!r} for type {letter}")
    rank = int(rank)
    order = weyl_group_order(letter, rank)
    if order > max_weyl_order:
        raise GuardExceeded(
            f"{letter}{rank} has Weyl group order {order}, above the configured "
            f"limit {max_weyl_order}; raise max_weyl_order to proceed"
        )

    simple = _simple_roots(letter, rank)
    roots = _close_under_reflections(simple)

    # Sign classification from coordinates in the simple-root basis.
    coeffs = np.linalg.lstsq(simple.T, roots.T, rcond=None)[0].T
    pos_mask = np.all(coeffs >= -1e-7, axis=1)
    neg_mask = np.all(coeffs <= 1e-7, axis=1)
    if not np.all(pos_mask ^ neg_mask):
        raise NumericalFailure(f"root sign classification failed for {letter}{rank}")
    positives = roots[pos_mask]
    if 2 * len(positives) != len(roots):
        raise NumericalFailure(f"positive half has wrong size for {letter}{rank}")

    positives = positives[sorted(range(len(positives)), key=lambda i: _key(positives[i]))]
    all_roots = np.vstack([positives, -positives])
    index = {_key(v): i for i, v in enumerate(all_roots)}

    return RootSystem(
        type_label=f"{letter}{rank}",
        rank=rank,
        ambient_dim=simple.shape[1],
        simple_roots=simple,
        positive_roots=positives,
        all_roots=all_roots,
        weyl_order=order,
        span_basis=_span_basis(simple),
        _index=index,
    )


def root_system(spec: str, max_weyl_order: int = DEFAULT_MAX_WEYL_ORDER) -> RootSystem:
    """Build a root system from a spec string like "A3" or "G2"."""
    spec = str(spec).strip()
    if len(spec) < 2 or not spec[1:].isdigit():
        raise InputError(f"malformed algebra spec {spec!r}; expected e.g. 'A3'")
    return build_root_system(spec[0].upper(), int(spec[1:]), max_weyl_order)


@dataclass(frozen=True, eq=False)
class WeightData:
    """A dominant integral weight with its coroot pairings.

    ``m_alpha[i]`` is the nonnegative integer 2(alpha_i, vector)/(alpha_i,
    alpha_i) for the i-th positive root, ``m`` their sum, ``n`` the Weyl
    orbit size.
    """

    vector: np.ndarray
    m_alpha: np.ndarray
    m: int
    n: int
    spec: str

    def __post_init__(self):
        self.vector.setflags(write=False)
        self.m_alpha.setflags(write=False)

    @property
    def support(self) -> np.ndarray:
        """Indices of positive roots with nonzero pairing."""
        return np.nonzero(self.m_alpha > 0)[0]


def fundamental_weights(rs: RootSystem) -> np.ndarray:
    """Fundamental weights as rows, in ambient coordinates (inside span(R))."""
    simple = rs.simple_roots
    # pairing[k, j] = 2 (alpha_k, alpha_j) / (alpha_j, alpha_j)
    gram = simple @ simple.T
    pairing = 2.0 * gram / np.diag(gram)[None, :]
    combo = np.linalg.solve(pairing.T, np.eye(rs.rank))
    return combo.T @ simple


def _parse_weight_string(rs: RootSystem, spec: str):
    text = spec.strip()
    if text.startswith("fund:"):
        try:
            coeffs = [float(tok) for tok in text[len("fund:"):].split(",")]
        except ValueError:
            raise InputError(f"malformed fundamental weight spec {spec!r}") from None
        return "fund", coeffs
    text = text.strip("[]")
    try:
        entries = [float(tok) for tok in text.split(",")]
    except ValueError:
        raise InputError(f"malformed weight spec {spec!r}") from None
    return "bracket", entries


def parse_weight(rs: RootSystem, spec) -> WeightData:
    """Parse and validate a dominant integral weight.

    Parameters
    ----------
    rs : RootSystem
    spec : str or sequence
        Either bracket notation "[a1,...,aN]" (type A only; ambient
        coordinates, projected onto the root span by subtracting the mean) or
        "fund:c1,...,cr" (any type; nonnegative integer coefficients on the
        fundamental weights).  A bare sequence of numbers is read as bracket
        notation.

    Raises
    ------
    InputError
        If the weight is non-dominant, non-integral, zero, or malformed.
    """
    if isinstance(spec, str):
        kind, entries = _parse_weight_string(rs, spec)
    else:
        kind, entries = "bracket", [float(v) for v in np.asarray(spec, dtype=float)]

    if kind == "bracket":
        if not rs.type_label.startswith("A"):
            raise InputError(
                f"bracket weights are defined for type A only, not {rs.type_label}"
            )
        if len(entries) != rs.ambient_dim:
            raise InputError(
                f"bracket weight needs {rs.ambient_dim} entries for {rs.type_label}, "
                f"got {len(entries)}"
            )
        rounded = [round(v) for v in entries]
        if any(abs(v - q) > INTEGRALITY_TOL for v, q in zip(entries, rounded)):
            raise InputError(f"bracket weight entries must be integers, got {entries}")
        vec = np.array(rounded, dtype=float)
        vec -= vec.mean()
        canonical = "[" + ",".join(str(int(q)) for q in rounded) + "]"
    else:
        if len(entries) != rs.rank:
            raise InputError(
                f"fundamental weight needs {rs.rank} coefficients for {rs.type_label}, "
                f"got {len(entries)}"
            )
        rounded = [round(v) for v in entries]
        if any(abs(v - q) > INTEGRALITY_TOL or q < 0 for v, q in zip(entries, rounded)):
            raise InputError(
                f"fundamental coefficients must be nonnegative integers, got {entries}"
            )
        vec = np.asarray(rounded, dtype=float) @ fundamental_weights(rs)
        canonical = "fund:" + ",".join(str(int(q)) for q in rounded)

    # Dominance: report the first violating simple root by name.
    for i, alpha in enumerate(rs.simple_roots):
        pairing = rs.coroot_pairing(alpha, vec)
        if pairing < -INTEGRALITY_TOL:
            raise InputError(
                f"weight {canonical} is not dominant: pairing with simple root "
                f"#{i} {alpha.tolist()} is {pairing:.6g}"
            )

    m_alpha = np.empty(rs.npos, dtype=np.int64)
    for i, alpha in enumerate(rs.positive_roots):
        pairing = rs.coroot_pairing(alpha, vec)
        nearest = round(pairing)
        if abs(pairing - nearest) > INTEGRALITY_TOL:
            raise InputError(
                f"weight {canonical} is not integral: pairing with positive root "
                f"{alpha.tolist()} is {pairing!r}"
            )
        if nearest < 0:
            raise InputError(
                f"weight {canonical} is not dominant: pairing with positive root "
                f"{alpha.tolist()} is {nearest}"
            )
        m_alpha[i] = nearest

    if not np.any(m_alpha):
        raise InputError("zero weight gives an empty construction; pick lambda != 0")

    n = len(_orbit_vectors(rs, vec))
    return WeightData(
        vector=vec, m_alpha=m_alpha, m=int(m_alpha.sum()), n=n, spec=canonical
    )


def _orbit_vectors(rs: RootSystem, start: np.ndarray) -> list:
    gens = [reflection_matrix(a) for a in rs.simple_roots]
    vectors = [np.asarray(start, dtype=float)]
    seen = {_key(start)}
    head = 0
    while head < len(vectors):
        v = vectors[head]
        head += 1
        for g in gens:
            image = g @ v
            k = _key(image)
            if k not in seen:
                seen.add(k)
                vectors.append(image)
    return vectors


@dataclass(frozen=True, eq=False)
class WeylOrbit:
    """A Weyl orbit with one orthogonal representative map per element.

    ``representatives[k]`` is an ambient orthogonal matrix (a product of
    simple reflections, acting on span(R) and fixing its complement) with
    ``representatives[k] @ elements[0] == elements[k]``.  Element order is the
    breadth-first discovery order with generators visited in index order, so
    two runs agree exactly.
    """

    root_system: RootSystem
    elements: np.ndarray
    representatives: np.ndarray
    stabilizer_order: int
    group_order: int
    _element_index: dict = field(repr=False)

    def __post_init__(self):
        self.elements.setflags(write=False)
        self.representatives.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.elements)

    def element_index(self, vec: np.ndarray) -> int:
        """Index of an orbit element (exact up to rounding noise)."""
        idx = self._element_index.get(_key(vec))
        if idx is not None:
            return idx
        dists = np.linalg.norm(self.elements - np.asarray(vec, dtype=float), axis=1)
        nearest = int(np.argmin(dists))
        if dists[nearest] <= ROOT_MATCH_TOL:
            return nearest
        raise NumericalFailure(f"vector {np.asarray(vec).tolist()} is not an orbit element")


def weyl_orbit(rs: RootSystem, wd: WeightData, max_orbit: int | None = None) -> WeylOrbit:
    """Enumerate the Weyl orbit of ``wd`` with coset representative maps."""
    gens = [reflection_matrix(a) for a in rs.simple_roots]
    start = np.asarray(wd.vector, dtype=float)
    elements = [start]
    reps = [np.eye(rs.ambient_dim)]
    seen = {_key(start): 0}
    head = 0
    while head < len(elements):
        v = elements[head]
        g_here = reps[head]
        head += 1
        for g in gens:
            image = g @ v
            k = _key(image)
            if k not in seen:
                if max_orbit is not None and len(elements) >= max_orbit:
                    raise GuardExceeded(
                        f"orbit size exceeds the configured limit {max_orbit}"
                    )
                seen[k] = len(elements)
                elements.append(image)
                reps.append(g @ g_here)

    n = len(elements)
    if n != wd.n:
        raise NumericalFailure(f"orbit size {n} disagrees with weight data n={wd.n}")
    if rs.weyl_order % n != 0:
        raise NumericalFailure(
            f"orbit size {n} does not divide the Weyl order {rs.weyl_order}"
        )
    return WeylOrbit(
        root_system=rs,
        elements=np.array(elements),
        representatives=np.array(reps),
        stabilizer_order=rs.weyl_order // n,
        group_order=rs.weyl_order,
        _element_index=dict(seen),
    )


def act_on_root(orbit: WeylOrbit, k: int, alpha: np.ndarray) -> RootImage:
    """Image of a root under the k-th representative, snapped onto the root list.

    Returns the image vector, its index in ``all_roots`` and whether it lies
    in the positive half.  Indices are 0-based.
    """
    rs = orbit.root_system
    if not 0 <= k < orbit.n:
        raise InputError(f"coset index {k} out of range 0..{orbit.n - 1}")
    image = orbit.representatives[k] @ np.asarray(alpha, dtype=float)
    idx = rs.root_index(image)
    return RootImage(vector=rs.all_roots[idx], index=idx, positive=rs.is_positive_index(idx))


def weyl_group_elements(rs: RootSystem, max_order: int = 100_000) -> np.ndarray:
    """All Weyl group elements as ambient matrices (small groups only)."""
    if rs.weyl_order > max_order:
        raise GuardExceeded(
            f"refusing to enumerate {rs.weyl_order} group elements (limit {max_order})"
        )
    gens = [reflection_matrix(a) for a in rs.simple_roots]
    mats = [np.eye(rs.ambient_dim)]
    seen = {_key(mats[0].ravel())}
    head = 0
    while head < len(mats):
        g_here = mats[head]
        head += 1
        for g in gens:
            prod = g @ g_here
            k = _key(prod.ravel())
            if k not in seen:
                seen.add(k)
                mats.append(prod)
    if len(mats) != rs.weyl_order:
        raise NumericalFailure(
            f"enumerated {len(mats)} group elements, expected {rs.weyl_order}"
        )
    return np.array(mats)


def stabilizer_elements(rs: RootSystem, vec: np.ndarray, max_order: int = 100_000) -> np.ndarray:
    """Weyl group elements fixing ``vec`` (by full-group enumeration)."""
    vec = np.asarray(vec, dtype=float)
    mats = weyl_group_elements(rs, max_order)
    keep = [g for g in mats if np.linalg.norm(g @ vec - vec) <= ROOT_MATCH_TOL]
    return np.array(keep)
