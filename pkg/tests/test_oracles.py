from collections import Counter

import numpy as np
import pytest

import weyldelta as wd
from weyldelta.confgeom import canonical_collinear
from weyldelta.oracles import (
    atiyah_sutcliffe_determinant,
    collinear_delta_closed_form,
    exponent_multiset,
    points_to_configuration,
)


def test_exponent_multisets(context):
    rs, w, orbit, _ = context("[1,0,0,0]")
    ms = exponent_multiset(rs, w, orbit)
    assert sorted(ms.exponents) == [0, 1, 2, 3]
    assert all(mu == 1 for mu in ms.counts.values())

    rs, w, orbit, _ = context("[1,1,0,0]")
    ms = exponent_multiset(rs, w, orbit)
    assert Counter(ms.exponents) == Counter({4: 1, 3: 1, 2: 2, 1: 1, 0: 1})
    assert ms.rank == 5

    rs = wd.root_system("A1")
    w = wd.parse_weight(rs, "fund:1")
    ms = exponent_multiset(rs, w, wd.weyl_orbit(rs, w))
    assert sorted(ms.exponents) == [0, 1]


def test_exponents_bounded_and_complete(context):
    rs, w, orbit, _ = context("[3,2,1,0]")
    ms = exponent_multiset(rs, w, orbit)
    assert len(ms.exponents) == orbit.n
    assert all(0 <= c <= w.m for c in ms.exponents)
    assert sum(ms.counts.values()) == orbit.n


def test_closed_form_frozen_values(context):
    for spec, expected in [
        ("[1,0,0,0]", 1.0),
        ("[1,1,0,0]", np.sqrt(2.0)),
        ("[2,2,0,0]", 4.0 * np.sqrt(2.0)),
    ]:
        rs, w, orbit, _ = context(spec)
        assert collinear_delta_closed_form(rs, w, orbit) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize(
    "algebra,weight",
    [("B2", "fund:1,0"), ("B2", "fund:0,1"), ("G2", "fund:1,0"), ("D4", "fund:1,0,0,0")],
)
def test_closed_form_matches_pipeline_other_types(algebra, weight):
    rs = wd.root_system(algebra)
    w = wd.parse_weight(rs, weight)
    orbit = wd.weyl_orbit(rs, w)
    r_col = wd.collinear_rank(rs, w, orbit)
    closed = collinear_delta_closed_form(rs, w, orbit)
    report = wd.evaluate_configuration(rs, w, orbit, canonical_collinear(rs), r_col)
    assert report.delta == pytest.approx(closed, rel=1e-9)
    assert report.numerical_rank == r_col


def test_as_determinant_two_points():
    rng = np.random.default_rng(0)
    for _ in range(10):
        points = rng.normal(size=(2, 3))
        assert abs(atiyah_sutcliffe_determinant(points)) == pytest.approx(1.0, abs=1e-12)


def test_as_determinant_collinear_points():
    rng = np.random.default_rng(1)
    axis = rng.normal(size=3)
    axis /= np.linalg.norm(axis)
    heights = np.sort(rng.uniform(-2, 2, size=5))
    points = heights[:, None] * axis
    assert abs(atiyah_sutcliffe_determinant(points)) == pytest.approx(1.0, abs=1e-10)


def test_as_determinant_rejections():
    with pytest.raises(wd.InputError, match="coincide"):
        atiyah_sutcliffe_determinant(np.zeros((2, 3)))
    with pytest.raises(wd.InputError):
        atiyah_sutcliffe_determinant(np.zeros((1, 3)))
    with pytest.raises(wd.InputError):
        atiyah_sutcliffe_determinant(np.zeros((3, 2)))
    with pytest.raises(wd.InputError, match="convention"):
        atiyah_sutcliffe_determinant(np.eye(3), convention="sideways")


def test_as_equivalence_with_pipeline(context):
    rs, w, orbit, r_col = context("[1,1,1,0]")
    rng = np.random.default_rng(2)
    for _ in range(20):
        points = rng.normal(size=(4, 3))
        delta_val = wd.evaluate_configuration(
            rs, w, orbit, points_to_configuration(rs, points), r_col
        ).delta
        assert abs(atiyah_sutcliffe_determinant(points)) == pytest.approx(delta_val, rel=1e-10)


def test_both_conventions_agree_in_modulus():
    # point reflection conjugates the determinant, so the modulus is shared;
    # "outward" stays pinned because it matches the column construction
    rng = np.random.default_rng(3)
    points = rng.normal(size=(4, 3))
    out = abs(atiyah_sutcliffe_determinant(points, "outward"))
    inw = abs(atiyah_sutcliffe_determinant(points, "inward"))
    assert out == pytest.approx(inw, rel=1e-12)


def test_points_to_configuration_pairings(a3):
    rng = np.random.default_rng(4)
    points = rng.normal(size=(4, 3))
    x = points_to_configuration(a3, points)
    # root e_i - e_j recovers the chord x_i - x_j
    for i in range(4):
        for j in range(4):
            if i == j:
                continue
            alpha = np.eye(4)[i] - np.eye(4)[j]
            assert np.allclose(wd.pair_root(x, alpha), points[i] - points[j], atol=1e-12)
    with pytest.raises(wd.InputError):
        points_to_configuration(a3, rng.normal(size=(5, 3)))
    with pytest.raises(wd.InputError):
        points_to_configuration(wd.root_system("B2"), rng.normal(size=(2, 3)))
