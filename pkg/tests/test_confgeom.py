import numpy as np
import pytest

import weyldelta as wd
from weyldelta.confgeom import canonical_collinear, random_regular_vector, random_rotation
from weyldelta.liealg import reflection_matrix

E3 = np.array([0.0, 0.0, 1.0])


def test_pair_root_on_canonical_collinear(a3):
    x = canonical_collinear(a3)
    rho = a3.rho
    for alpha in a3.positive_roots:
        expected = float(alpha @ rho)
        assert expected > 0
        assert np.allclose(wd.pair_root(x, alpha), expected * E3, atol=1e-12)
        # exact sign flip under negation
        assert np.array_equal(wd.pair_root(x, -alpha), -wd.pair_root(x, alpha))


def test_pair_root_zero_configuration(a3):
    x = wd.Configuration.from_coords(a3, np.zeros((3, 3)))
    for alpha in a3.all_roots:
        assert np.array_equal(wd.pair_root(x, alpha), np.zeros(3))
    assert wd.regularity_margin(a3, x).margin == 0.0


def test_margin_of_canonical_collinear(a3):
    report = wd.regularity_margin(a3, canonical_collinear(a3))
    expected = min(float(a @ a3.rho) for a in a3.positive_roots)
    assert report.margin == pytest.approx(expected, rel=1e-12)
    assert float(report.root @ a3.rho) == pytest.approx(expected, rel=1e-12)


def test_sampling_determinism_and_margin(a3):
    x1 = wd.sample_configuration(a3, np.random.default_rng(11))
    x2 = wd.sample_configuration(a3, np.random.default_rng(11))
    assert np.array_equal(x1.coords, x2.coords)
    x3 = wd.sample_configuration(a3, np.random.default_rng(12))
    assert abs(np.linalg.norm(x3.coords) - np.linalg.norm(x1.coords)) > 0
    assert wd.regularity_margin(a3, x1).margin > 1e-12


def test_sampling_rejects_unreachable_margin(a3):
    with pytest.raises(wd.InputError, match="margin_min"):
        wd.sample_configuration(a3, np.random.default_rng(0), margin_min=1e9)
    with pytest.raises(wd.InputError, match="scale"):
        wd.sample_configuration(a3, np.random.default_rng(0), scale=0.0)


def test_collinear_configuration_validation(a3):
    x = wd.collinear_configuration(a3, a3.rho, E3)
    assert wd.regularity_margin(a3, x).margin > 0
    # all pairings are parallel to the direction
    for alpha in a3.positive_roots:
        p = wd.pair_root(x, alpha)
        assert np.allclose(np.cross(p, E3), 0, atol=1e-12)
    # xi on a wall is rejected with the vanishing root named
    wall = wd.parse_weight(a3, "[1,1,0,0]").vector
    with pytest.raises(wd.InputError, match="not regular"):
        wd.collinear_configuration(a3, wall, E3)
    with pytest.raises(wd.InputError, match="unit vector"):
        wd.collinear_configuration(a3, a3.rho, np.array([0.0, 0.0, 2.0]))


def test_rotation_action(a3):
    rng = np.random.default_rng(5)
    x = wd.sample_configuration(a3, rng)
    rot = random_rotation(rng)
    moved = wd.group_action(x, rotation=rot)
    base = wd.regularity_margin(a3, x).margin
    assert wd.regularity_margin(a3, moved).margin == pytest.approx(base, abs=1e-12)
    for alpha in a3.all_roots:
        assert np.allclose(
            wd.pair_root(moved, alpha), rot @ wd.pair_root(x, alpha), atol=1e-12
        )


def test_scale_action(a3):
    x = wd.sample_configuration(a3, np.random.default_rng(6))
    base = wd.regularity_margin(a3, x).margin
    doubled = wd.group_action(x, scale=2.0)
    assert wd.regularity_margin(a3, doubled).margin == pytest.approx(2 * base, rel=1e-12)


def test_weyl_action(a3):
    rng = np.random.default_rng(7)
    x = wd.sample_configuration(a3, rng)
    w = reflection_matrix(a3.simple_roots[1])
    moved = wd.group_action(x, weyl=w)
    # pairing with alpha after the move equals pairing with w^{-1} alpha before
    for alpha in a3.all_roots:
        assert np.allclose(
            wd.pair_root(moved, alpha), wd.pair_root(x, w.T @ alpha), atol=1e-12
        )
    norms = sorted(np.linalg.norm(a3.positive_roots @ x.ambient, axis=1))
    moved_norms = sorted(np.linalg.norm(a3.positive_roots @ moved.ambient, axis=1))
    assert np.allclose(norms, moved_norms, rtol=1e-12)


def test_group_action_rejections(a3):
    x = wd.sample_configuration(a3, np.random.default_rng(8))
    with pytest.raises(wd.InputError, match="exactly one"):
        wd.group_action(x)
    with pytest.raises(wd.InputError, match="exactly one"):
        wd.group_action(x, rotation=np.eye(3), scale=2.0)
    with pytest.raises(wd.InputError, match="orthogonal"):
        wd.group_action(x, rotation=np.eye(3) * 1.001)
    with pytest.raises(wd.InputError, match="determinant"):
        wd.group_action(x, rotation=np.diag([1.0, 1.0, -1.0]))
    with pytest.raises(wd.InputError, match="scale"):
        wd.group_action(x, scale=-1.0)


def test_json_roundtrip(a3):
    x = wd.sample_configuration(a3, np.random.default_rng(9))
    text = x.to_json()
    back = wd.Configuration.from_json(a3, text)
    assert np.array_equal(back.coords, x.coords)
    assert np.array_equal(back.ambient, x.ambient)


def test_from_ambient_projects_onto_span(a3):
    # a type-A ambient matrix with nonzero column sums gets centered
    raw = np.arange(12.0).reshape(4, 3)
    x = wd.Configuration.from_ambient(a3, raw)
    assert np.allclose(x.ambient.sum(axis=0), 0, atol=1e-12)
    assert np.allclose(x.ambient, raw - raw.mean(axis=0), atol=1e-12)
    with pytest.raises(wd.InputError):
        wd.Configuration.from_coords(a3, np.zeros((4, 3)))


def test_random_regular_vector(a3):
    xi = random_regular_vector(a3, np.random.default_rng(10))
    assert np.min(np.abs(a3.positive_roots @ xi)) > 0
    # lies in span(R): coordinates sum to zero for type A
    assert abs(xi.sum()) < 1e-12
