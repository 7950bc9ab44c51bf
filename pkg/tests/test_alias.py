import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trigspline.alias import li1_imag, log_part, polylog_unit, reduce_angle, shifted_sum

mpmath.mp.dps = 30


def lerch_sum(theta, s, a):
    """sum_{m>=1} e^{i m theta}/(m+a)^s via mpmath's Lerch transcendent."""
    if theta == 0.0:
        return complex(mpmath.zeta(s, 1 + a))
    z = mpmath.expj(theta)
    return complex(z * mpmath.lerchphi(z, s, 1 + a))


def test_reduce_angle():
    np.testing.assert_allclose(reduce_angle([0.0, np.pi, -np.pi, 3 * np.pi, 7.0]),
                               [0.0, np.pi, np.pi, np.pi, 7.0 - 2 * np.pi], atol=1e-15)
    assert reduce_angle(1e-7) == 1e-7


@pytest.mark.parametrize("s", [2, 3, 4, 7, 12])
@pytest.mark.parametrize("theta", [1e-6, 0.3, 1.0, 2.5, np.pi, -2.0])
def test_polylog_unit(s, theta):
    ref = complex(mpmath.polylog(s, mpmath.expj(theta)))
    got = complex(polylog_unit(s, theta))
    assert abs(got - ref) <= 1e-14 * max(1.0, abs(ref))


def test_polylog_at_one_is_zeta():
    assert complex(polylog_unit(2, 0.0)) == pytest.approx(np.pi**2 / 6, rel=1e-15)


@pytest.mark.parametrize("theta", [0.1, 1.0, 3.0, -0.5])
def test_li1_parts(theta):
    ref = complex(mpmath.polylog(1, mpmath.expj(theta)))
    assert log_part(theta) == pytest.approx(ref.real, rel=1e-14)
    assert li1_imag(theta) == pytest.approx(ref.imag, rel=1e-14)


def test_log_part_singular_at_zero():
    assert np.isinf(log_part(0.0))
    assert li1_imag(0.0) == 0.0


@settings(max_examples=80, deadline=None)
@given(
    st.floats(-np.pi, np.pi),
    st.integers(1, 8),
    st.floats(-0.49, 0.49),
)
def test_shifted_sum_matches_lerch(theta, s, a):
    if s == 1 and abs(reduce_angle(theta)) < 1e-3:
        theta = 1e-3
    reg, lc = shifted_sum(np.array(theta), s, a)
    got = complex(reg) + (lc * float(log_part(theta)) if lc else 0.0)
    ref = lerch_sum(theta, s, a)
    assert abs(got - ref) <= 1e-13 * max(1.0, abs(ref))


def test_shifted_sum_log_coefficient():
    assert shifted_sum(np.array(0.4), 1, 0.2)[1] == 1.0
    assert shifted_sum(np.array(0.4), 2, 0.2)[1] == 0.0
    with pytest.raises(ValueError):
        shifted_sum(np.array(0.4), 0, 0.2)
    with pytest.raises(ValueError):
        shifted_sum(np.array(0.4), 2, 1.0)
