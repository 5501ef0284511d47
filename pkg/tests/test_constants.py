import math

import numpy as np
import pytest

from relqopt.constants import (
    EARTH,
    ROUNDED_EARTH,
    EarthParams,
    Quantity,
    angle_in_radians,
    cgs_angular_momentum_to_si,
    convert_angle,
)
from relqopt.errors import ConfigurationError, DomainError


def test_radian_to_arcmsec():
    assert convert_angle(1.0, "arcmsec") == pytest.approx(2.062648e8, rel=1e-6)


def test_zero_is_zero_in_every_unit():
    for unit in ("rad", "deg", "arcsec", "arcmsec"):
        assert convert_angle(0.0, unit) == 0.0


def test_pi_is_180_degrees():
    assert convert_angle(math.pi, "deg") == pytest.approx(180.0, rel=1e-15)


def test_angle_aliases():
    assert convert_angle(1.0, "arc msec") == convert_angle(1.0, "arcmsec")
    assert convert_angle(1.0, "mas") == convert_angle(1.0, "arcmsec")


def test_conversion_round_trip():
    rng = np.random.default_rng(11)
    for x in rng.uniform(-10, 10, size=50):
        for unit in ("rad", "deg", "arcsec", "arcmsec"):
            back = angle_in_radians(convert_angle(x, unit), unit)
            assert back == pytest.approx(x, rel=1e-14, abs=1e-300)


def test_unknown_angle_unit_rejected():
    with pytest.raises(ConfigurationError):
        convert_angle(1.0, "furlong")


def test_cgs_angular_momentum():
    assert cgs_angular_momentum_to_si(0.0) == 0.0
    assert cgs_angular_momentum_to_si(1.0e7) == 1.0


def test_quantity_tag_arithmetic():
    a = Quantity(2.0, "m")
    b = Quantity(3.0, "m")
    assert (a + b).value == 5.0
    assert (a - b).value == -1.0
    assert (-a).value == -2.0
    assert a.scaled(4.0).value == 8.0
    with pytest.raises(ConfigurationError):
        a + Quantity(1.0, "s")
    with pytest.raises(ConfigurationError):
        Quantity(1.0, "parsec")


def test_earth_mu_from_cgs_construction():
    assert ROUNDED_EARTH.mu == pytest.approx(3.986e14, rel=5e-3)
    assert EARTH.mu == pytest.approx(3.986e14, rel=5e-3)


def test_earth_params_validation():
    with pytest.raises(DomainError):
        EarthParams(mass=-1.0)
    with pytest.raises(DomainError):
        EarthParams(mu=1.0)  # inconsistent with G*mass


def test_rounded_earth_unit_conversion():
    assert ROUNDED_EARTH.mass == pytest.approx(5.98e24)
    assert ROUNDED_EARTH.angular_momentum == pytest.approx(5.86e33)
