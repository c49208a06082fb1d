import numpy as np
import pytest

import weyldelta as wd
from weyldelta.liealg import (
    fundamental_weights,
    reflection_matrix,
    stabilizer_elements,
    weyl_group_elements,
)
from weyldelta.oracles import exponent_multiset


TYPES_SMALL = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "F4"]


def test_root_counts():
    assert wd.root_system("A3").npos == 6
    assert len(wd.root_system("A3").all_roots) == 12
    assert wd.root_system("B2").npos == 4
    assert len(wd.root_system("B2").all_roots) == 8
    g2 = wd.root_system("G2")
    assert g2.npos == 6
    lengths = sorted({round(float(a @ a), 9) for a in g2.positive_roots})
    assert len(lengths) == 2 and lengths[1] / lengths[0] == pytest.approx(3.0)


@pytest.mark.parametrize("spec", TYPES_SMALL)
def test_root_system_invariants(spec):
    rs = wd.root_system(spec)
    npos = rs.npos
    assert len(rs.all_roots) == 2 * npos
    # R = R+ union -R+
    keys = {tuple(np.round(v, 9)) for v in rs.all_roots}
    for alpha in rs.positive_roots:
        assert tuple(np.round(-alpha, 9)) in keys
    # simple roots linearly independent
    assert np.linalg.matrix_rank(rs.simple_roots) == rs.rank
    # positive roots are nonnegative integer combinations of simple roots
    coeffs = np.linalg.lstsq(rs.simple_roots.T, rs.positive_roots.T, rcond=None)[0].T
    assert np.all(coeffs > -1e-9)
    assert np.max(np.abs(coeffs - np.round(coeffs))) < 1e-9
    # Cartan integers
    for i, ai in enumerate(rs.simple_roots):
        for j, aj in enumerate(rs.simple_roots):
            c = 2 * (ai @ aj) / (aj @ aj)
            assert abs(c - round(c)) < 1e-9
            if i != j:
                assert round(c) in (0, -1, -2, -3)
            else:
                assert round(c) == 2
    # reflection in any root permutes R
    for alpha in rs.all_roots[:: max(1, npos // 3)]:
        images = rs.all_roots @ reflection_matrix(alpha).T
        for img in images:
            assert tuple(np.round(img, 9)) in keys


def test_invalid_types_rejected():
    with pytest.raises(wd.InputError):
        wd.build_root_system("H", 4)
    with pytest.raises(wd.InputError):
        wd.build_root_system("D", 3)
    with pytest.raises(wd.InputError):
        wd.build_root_system("E", 9)
    with pytest.raises(wd.InputError):
        wd.root_system("A0")
    with pytest.raises(wd.InputError):
        wd.root_system("b")


def test_weyl_order_guard_names_limit():
    with pytest.raises(wd.GuardExceeded, match="1000000"):
        wd.root_system("E8")
    # E6 is under the default guard
    assert wd.root_system("E6").weyl_order == 51840


def test_parse_bracket_projection(a3):
    w = wd.parse_weight(a3, "[3,3,2,0]")
    assert np.allclose(w.vector, [1.0, 1.0, 0.0, -2.0])


def test_parse_weight_first_fundamental(a3):
    w = wd.parse_weight(a3, "[1,0,0,0]")
    assert np.allclose(w.vector, [0.75, -0.25, -0.25, -0.25])
    # independent m: sum of coordinate differences over pairs i < j
    lam = w.vector
    expected_m = sum(lam[i] - lam[j] for i in range(4) for j in range(i + 1, 4))
    assert w.m == 3 == round(expected_m)
    assert w.n == 4


def test_parse_weight_regular(a3):
    w = wd.parse_weight(a3, "[6,4,2,0]")
    lam = w.vector
    diffs = sorted(round(lam[i] - lam[j]) for i in range(4) for j in range(i + 1, 4))
    assert diffs == [2, 2, 2, 4, 4, 6]
    assert w.m == 20
    assert w.n == 24  # regular weight: free orbit


def test_parse_weight_fundamental_basis():
    b2 = wd.root_system("B2")
    w = wd.parse_weight(b2, "fund:1,0")
    assert np.allclose(w.vector, [1.0, 0.0])
    assert w.m == 4 and w.n == 4
    fw = fundamental_weights(b2)
    for i, alpha in enumerate(b2.simple_roots):
        for j in range(2):
            assert b2.coroot_pairing(alpha, fw[j]) == pytest.approx(1.0 if i == j else 0.0, abs=1e-12)


def test_parse_weight_rejections(a3):
    with pytest.raises(wd.InputError, match="not dominant"):
        wd.parse_weight(a3, "[0,1,0,0]")
    with pytest.raises(wd.InputError, match="integer"):
        wd.parse_weight(a3, "[1.5,0,0,0]")
    with pytest.raises(wd.InputError, match="zero weight"):
        wd.parse_weight(a3, "[2,2,2,2]")
    with pytest.raises(wd.InputError, match="type A"):
        wd.parse_weight(wd.root_system("B2"), "[1,0]")
    with pytest.raises(wd.InputError, match="4 entries"):
        wd.parse_weight(a3, "[1,0,0]")
    with pytest.raises(wd.InputError, match="nonnegative"):
        wd.parse_weight(wd.root_system("B2"), "fund:-1,0")
    with pytest.raises(wd.InputError, match="malformed"):
        wd.parse_weight(a3, "[1,x,0,0]")


@pytest.mark.parametrize(
    "spec,n", [("[1,0,0,0]", 4), ("[6,4,2,0]", 24), ("[1,1,0,0]", 6)]
)
def test_orbit_sizes(a3, spec, n):
    w = wd.parse_weight(a3, spec)
    orbit = wd.weyl_orbit(a3, w)
    assert orbit.n == n
    assert orbit.n * orbit.stabilizer_order == orbit.group_order == 24


def test_orbit_first_fundamental_elements(a3):
    w = wd.parse_weight(a3, "[1,0,0,0]")
    orbit = wd.weyl_orbit(a3, w)
    # orbit = projections of the four coordinate vectors
    expected = {tuple(np.round(np.eye(4)[k] - 0.25, 9)) for k in range(4)}
    got = {tuple(np.round(v, 9)) for v in orbit.elements}
    assert got == expected


def test_orbit_determinism_and_representatives(a3):
    w = wd.parse_weight(a3, "[2,1,0,0]")
    first = wd.weyl_orbit(a3, w)
    second = wd.weyl_orbit(a3, w)
    assert np.array_equal(first.elements, second.elements)
    assert np.array_equal(first.representatives, second.representatives)
    for k in range(first.n):
        g = first.representatives[k]
        assert np.linalg.norm(g @ w.vector - first.elements[k]) < 1e-12
        assert abs(np.linalg.norm(first.elements[k]) - np.linalg.norm(w.vector)) < 1e-12
        # each representative permutes the root set
        keys = {tuple(np.round(v, 9)) for v in a3.all_roots}
        for img in a3.all_roots @ g.T:
            assert tuple(np.round(img, 9)) in keys


def test_act_on_root_identity_and_transposition(a3):
    w = wd.parse_weight(a3, "[1,0,0,0]")
    orbit = wd.weyl_orbit(a3, w)
    assert np.allclose(orbit.representatives[0], np.eye(4))
    for i, alpha in enumerate(a3.all_roots):
        image = wd.act_on_root(orbit, 0, alpha)
        assert image.index == i
        assert image.positive == (i < a3.npos)
    # BFS discovers s1(lambda) first: representative 1 is the reflection in e1-e2
    assert np.allclose(orbit.representatives[1], reflection_matrix(a3.simple_roots[0]))
    image = wd.act_on_root(orbit, 1, np.array([1.0, 0.0, -1.0, 0.0]))
    assert np.allclose(image.vector, [0.0, 1.0, -1.0, 0.0])
    assert image.positive
    with pytest.raises(wd.InputError):
        wd.act_on_root(orbit, 7, a3.simple_roots[0])


def test_representative_choice_weighted_multiset(a3):
    # the weighted image multiset is a coset invariant
    w = wd.parse_weight(a3, "[1,0,0,0]")
    orbit = wd.weyl_orbit(a3, w)
    stab = stabilizer_elements(a3, w.vector)
    assert len(stab) == orbit.stabilizer_order == 6
    support = w.support
    for k in range(orbit.n):
        base = sorted(
            (tuple(np.round(orbit.representatives[k] @ a3.positive_roots[i], 9)), int(w.m_alpha[i]))
            for i in support
        )
        for s in stab:
            alt = sorted(
                (tuple(np.round(orbit.representatives[k] @ s @ a3.positive_roots[i], 9)), int(w.m_alpha[i]))
                for i in support
            )
            assert alt == base


@pytest.mark.parametrize(
    "algebra,weight",
    [
        ("A3", "[1,0,0,0]"),
        ("A3", "[2,1,0,0]"),
        ("A3", "[1,1,0,0]"),
        ("B2", "fund:1,0"),
        ("B2", "fund:1,1"),
        ("G2", "fund:0,1"),
    ],
)
def test_exponent_sum_is_half_n_m(algebra, weight):
    rs = wd.root_system(algebra)
    w = wd.parse_weight(rs, weight)
    orbit = wd.weyl_orbit(rs, w)
    exponents = exponent_multiset(rs, w, orbit).exponents
    assert sum(exponents) * 2 == orbit.n * w.m


def test_orbit_guard_names_limit(a3):
    w = wd.parse_weight(a3, "[6,4,2,0]")
    with pytest.raises(wd.GuardExceeded, match="10"):
        wd.weyl_orbit(a3, w, max_orbit=10)


def test_weyl_group_enumeration(a3):
    mats = weyl_group_elements(a3)
    assert len(mats) == 24
    with pytest.raises(wd.GuardExceeded):
        weyl_group_elements(wd.root_system("E6"), max_order=1000)
