import pytest

import weyldelta as wd


@pytest.fixture(scope="session")
def a3():
    return wd.root_system("A3")


@pytest.fixture(scope="session")
def context():
    """Cached (rs, wd, orbit, r_col) bundles keyed by (algebra, weight)."""
    cache = {}

    def make(weight, algebra="A3"):
        key = (algebra, weight)
        if key not in cache:
            rs = wd.root_system(algebra)
            weight_data = wd.parse_weight(rs, weight)
            orbit = wd.weyl_orbit(rs, weight_data)
            r_col = wd.collinear_rank(rs, weight_data, orbit)
            cache[key] = (rs, weight_data, orbit, r_col)
        return cache[key]

    return make
