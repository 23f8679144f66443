import itertools

import numpy as np
import pytest
from hypothesis import given

from nvlogic.services.core_values import UnitInterval
from nvlogic.services.errors import UnknownName
from nvlogic.services.tnorms import NormFamily, complement, t_conorm, t_norm
from tests.strategies import intervals

FAMILIES = list(NormFamily)
TOL = 1e-12
N = 10_000


@pytest.fixture(scope="module")
def samples():
    rng = np.random.default_rng(20240517)
    return rng.random((3, N))


@pytest.mark.parametrize("fam", FAMILIES)
def test_commutative(fam, samples):
    x, y, _ = samples
    np.testing.assert_allclose(fam.norm(x, y), fam.norm(y, x), atol=TOL)
    np.testing.assert_allclose(fam.conorm(x, y), fam.conorm(y, x), atol=TOL)


@pytest.mark.parametrize("fam", FAMILIES)
def test_associative(fam, samples):
    x, y, z = samples
    np.testing.assert_allclose(fam.norm(fam.norm(x, y), z), fam.norm(x, fam.norm(y, z)), atol=TOL)
    np.testing.assert_allclose(fam.conorm(fam.conorm(x, y), z), fam.conorm(x, fam.conorm(y, z)), atol=TOL)


@pytest.mark.parametrize("fam", FAMILIES)
def test_identities(fam, samples):
    x = samples[0]
    np.testing.assert_array_equal(fam.norm(x, np.ones(N)), x)
    np.testing.assert_array_equal(fam.conorm(x, np.zeros(N)), x)


@pytest.mark.parametrize("fam", FAMILIES)
def test_monotone(fam, samples):
    x, y, z = samples
    lo, hi = np.minimum(x, y), np.maximum(x, y)
    assert (fam.norm(lo, z) <= fam.norm(hi, z) + TOL).all()
    assert (fam.conorm(lo, z) <= fam.conorm(hi, z) + TOL).all()


@pytest.mark.parametrize("fam", FAMILIES)
def test_de_morgan(fam, samples):
    x, y, _ = samples
    np.testing.assert_allclose(fam.conorm(x, y), 1.0 - fam.norm(1.0 - x, 1.0 - y), atol=TOL)


@pytest.mark.parametrize("fam", FAMILIES)
def test_boolean_corners(fam):
    for a, b in itertools.product((0.0, 1.0), repeat=2):
        assert t_norm(fam, a, b) == UnitInterval.scalar(float(a and b))
        assert t_conorm(fam, a, b) == UnitInterval.scalar(float(a or b))


def test_family_values():
    assert t_norm(NormFamily.PRODUCT, 0.5, 0.4).lo == pytest.approx(0.2)
    assert t_conorm(NormFamily.PRODUCT, 0.5, 0.4).lo == pytest.approx(0.7)
    assert t_norm(NormFamily.LUKASIEWICZ, 0.5, 0.4) == UnitInterval.scalar(0.0)
    assert t_conorm(NormFamily.LUKASIEWICZ, 0.5, 0.4).lo == pytest.approx(0.9)
    assert t_conorm(NormFamily.LUKASIEWICZ, 0.7, 0.6) == UnitInterval.scalar(1.0)


@pytest.mark.parametrize("fam", FAMILIES)
@given(x=intervals(), y=intervals())
def test_interval_lift_matches_grid(fam, x, y):
    # every grid point lands inside the lifted interval and the corners reach both ends
    grid_x = np.linspace(x.lo, x.hi, 7)
    grid_y = np.linspace(y.lo, y.hi, 7)
    gx, gy = np.meshgrid(grid_x, grid_y)
    for op, lifted in ((fam.norm, t_norm(fam, x, y)), (fam.conorm, t_conorm(fam, x, y))):
        values = np.clip(op(gx, gy), 0.0, 1.0)
        assert lifted.lo <= values.min() + TOL
        assert values.max() <= lifted.hi + TOL
        assert values.min() == pytest.approx(lifted.lo, abs=TOL)
        assert values.max() == pytest.approx(lifted.hi, abs=TOL)


def test_complement():
    assert complement((0.2, 0.5)) == UnitInterval(0.5, 0.8)
    assert complement(0.0) == UnitInterval.scalar(1.0)


@pytest.mark.parametrize("name, fam", [("MinMax", NormFamily.MIN_MAX), (" product", NormFamily.PRODUCT), ("LUKASIEWICZ", NormFamily.LUKASIEWICZ)])
def test_parse_family(name, fam):
    assert NormFamily.parse(name) is fam


def test_parse_unknown_family():
    with pytest.raises(UnknownName):
        NormFamily.parse("hamacher")


@pytest.mark.parametrize("fam", FAMILIES)
def test_bounded_by_min_and_max(fam, samples):
    x, y, _ = samples
    assert (fam.norm(x, y) <= np.minimum(x, y) + TOL).all()
    assert (fam.conorm(x, y) >= np.maximum(x, y) - TOL).all()


@pytest.mark.parametrize("fam", FAMILIES)
@given(x=intervals(), y=intervals())
def test_lifted_bounds(fam, x, y):
    assert t_norm(fam, x, y).hi <= min(x.hi, y.hi) + TOL
    assert t_conorm(fam, x, y).lo >= max(x.lo, y.lo) - TOL
