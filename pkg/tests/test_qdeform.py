import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lambert_tsallis.errors import DomainError, ZeroPowerError
from lambert_tsallis.qdeform import (
    QValue,
    clog1p,
    cpow,
    exp_q,
    exp_q_real,
    ln_q,
    qpow_transform,
)


@pytest.mark.parametrize("q", [-2.0, 0.0, 0.5, 1.0, 1.5, 2.0, 3.7])
def test_exp_q_at_zero_is_exactly_one(q):
    assert exp_q(q, 0) == 1
    assert exp_q_real(q, 0.0) == 1.0


@pytest.mark.parametrize("q, z, expected", [
    (1.5, -2.0, 0.25),
    (0.5, -2.0 / 3.0, 4.0 / 9.0),
    (2.0, 0.5, 2.0),
])
def test_exp_q_examples(q, z, expected):
    assert exp_q(q, z) == pytest.approx(expected, rel=1e-15)
    assert exp_q_real(q, z) == pytest.approx(expected, rel=1e-15)


def test_exp_q_real_classical():
    assert exp_q_real(1.0, 1.0) == pytest.approx(math.e, rel=1e-15)


def test_exp_q_real_domain_error():
    with pytest.raises(DomainError):
        exp_q_real(0.5, -2.1)


def test_exp_q_real_domain_slack_at_cutoff():
    # base 1 + 0.5 * (-2) is exactly zero; tiny overshoot is tolerated
    assert exp_q_real(0.5, -2.0) == 0.0
    assert exp_q_real(0.5, -2.0 - 1e-15) == 0.0


def test_exp_q_overflow_is_an_error():
    with pytest.raises(OverflowError):
        exp_q(1.0, 800.0)
    with pytest.raises(OverflowError):
        exp_q_real(0.5, 1e200)


def test_exp_q_negative_base_uses_principal_power():
    # q = -1: base = 1 + 2 z = -1, power 1/2 -> principal sqrt(-1) = i
    assert exp_q(-1.0, -1.0) == pytest.approx(1j, abs=1e-15)
    # -0.0 imaginary part is still the upper side of the cut
    assert exp_q(-1.0, complex(-1.0, -0.0)) == pytest.approx(1j, abs=1e-15)


def test_exp_q_array_matches_scalar():
    z = np.array([0.1, -0.3 + 0.2j, 2.0, -5.0])
    out = exp_q(1.3, z)
    assert out.shape == z.shape
    for zi, oi in zip(z, out):
        assert oi == exp_q(1.3, complex(zi))


@pytest.mark.parametrize("w", [-1.5, -0.3, 0.0, 0.7, 3.0])
@pytest.mark.parametrize("q", [0.25, 0.5, 1.0, 1.2, 2.5])
def test_real_and_complex_paths_agree_exactly(q, w):
    try:
        real = exp_q_real(q, w)
    except (DomainError, OverflowError):
        return
    assert exp_q(q, w) == real


def test_qpow_transform_examples():
    assert qpow_transform(1.0, 5.0).q == 1.0
    assert qpow_transform(1.5, 2.0).q == 1.25
    with pytest.raises(ZeroPowerError):
        qpow_transform(1.5, 0.0)


def test_power_rule_on_random_samples():
    rng = np.random.default_rng(20240101)
    checked = 0
    while checked < 1000:
        q = rng.uniform(-1.0, 3.0)
        r = rng.uniform(-4.0, 4.0)
        if abs(r) < 1e-3:
            continue
        z = complex(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3))
        lhs = cpow(exp_q(q, z), r)
        rhs = exp_q(qpow_transform(q, r), r * z)
        # the rule holds when Log does not wrap: keep |arg| of the base small
        base = 1 + (1 - q) * z
        if abs(cmath.phase(base) / (1 - q) * r) >= math.pi if q != 1 else False:
            continue
        assert abs(lhs - rhs) <= 1e-12 * abs(rhs)
        checked += 1


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("z", [-5.0, -1.0, 0.3, 2.0, 5.0, 2 + 3j])
def test_continuity_at_q_equal_one(z, sign):
    ez = cmath.exp(z)
    assert abs(exp_q(1 + sign * 1e-9, z) - ez) <= 1e-6 * abs(ez)


def test_ln_q_examples():
    assert ln_q(0.3, 1.0) == 0.0
    assert ln_q(2.0, 4.0) == pytest.approx(0.75, rel=1e-15)
    assert ln_q(1.0, math.e) == pytest.approx(1.0, rel=1e-15)
    with pytest.raises(DomainError):
        ln_q(1.2, 0.0)


@settings(max_examples=300, deadline=None)
@given(st.floats(1e-2, 10.0), st.floats(-1.0, 3.0))
def test_ln_q_round_trip(x, q):
    # below 1e-2 the subtraction inside ln_q loses digits for q < 0
    assert exp_q_real(q, ln_q(q, x)) == pytest.approx(x, rel=1e-10)


def test_qvalue_caches_complement():
    qv = QValue(0.75)
    assert qv.one_minus_q == 1.0 - 0.75
    with pytest.raises(ValueError):
        QValue(float("nan"))


def test_clog1p_keeps_tiny_real_part():
    v = clog1p(1e-20 + 1e-20j)
    assert v.real == pytest.approx(1e-20, rel=1e-12)
    assert v.imag == pytest.approx(1e-20, rel=1e-12)


def test_clog1p_huge_argument():
    x = -6e187 + 2e187j
    assert clog1p(x) == pytest.approx(cmath.log(1 + x), rel=1e-15)
    assert exp_q(2.0154, -5.9e187 + 2.2e187j) != 0


def test_cpow_principal_values():
    assert cpow(-8.0, 1.0 / 3.0) == pytest.approx(1 + math.sqrt(3) * 1j, rel=1e-14)
    assert cpow(0.0, 2.0) == 0
    assert cpow(4.0, 0.5) == pytest.approx(2.0, rel=1e-15)
