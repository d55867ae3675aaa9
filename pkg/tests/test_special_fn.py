import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dilog_zeros.errors import DomainError
from dilog_zeros.special_fn import (
    KAPPA,
    bernoulli_b2,
    clausen,
    li2,
    li2_principal,
    li2_unit_circle,
    log_principal,
)

PI2_6 = math.pi ** 2 / 6
finite = st.floats(-6, 6, allow_nan=False, allow_infinity=False)


def ref_li2(z):
    with mpmath.workdps(30):
        return complex(mpmath.polylog(2, z))


# --- log_principal ---


def test_log_principal_examples():
    assert log_principal(1) == 0
    assert log_principal(-1) == complex(0, math.pi)
    v = log_principal(-math.e)
    assert abs(v - complex(1, math.pi)) < 1e-15


def test_log_principal_negative_zero_imag_is_upper_edge():
    assert log_principal(complex(-2, -0.0)).imag == math.pi


def test_log_principal_zero_raises():
    with pytest.raises(DomainError):
        log_principal(0)


# --- li2 ---


def test_li2_examples():
    assert li2_principal(0).value == 0
    assert abs(li2(1) - PI2_6) < 1e-15
    assert abs(li2(-1) + math.pi ** 2 / 12) < 1e-15


def test_li2_direct_series_oracle():
    z = 0.3 + 0.4j
    acc = 0j
    zk = 1 + 0j
    for k in range(1, 201):
        zk *= z
        acc += zk / (k * k)
    assert abs(li2(z) - acc) < 1e-15


@pytest.mark.parametrize(
    "z",
    [0.9 + 0.2j, 0.5 + 0.8j, -0.7 + 0.7j, 1.3 - 0.6j, 3 + 4j, -50 + 1j, 0.999j, 1 + 1e-9j, 2.0, 7.5, -1e6],
)
def test_li2_against_mpmath(z):
    r = li2_principal(z)
    ref = ref_li2(z)
    assert abs(r.value - ref) <= 1e-14 * (1 + abs(ref))
    assert abs(r.value - ref) <= max(r.abs_err_estimate, 1e-300)


def test_li2_cut_is_lower_limit():
    # Im Li2(x + i0-) = -pi log x for x > 1
    for x in (1.5, 2.0, 10.0):
        v = li2(complex(x, 0.0))
        assert abs(v.imag + math.pi * math.log(x)) < 1e-13
        below = li2(complex(x, -1e-12))
        assert abs(v - below) < 1e-10


@settings(max_examples=300, deadline=None)
@given(finite, finite)
def test_li2_error_estimate_bound(x, y):
    z = complex(x, y)
    r = li2_principal(z)
    assert r.abs_err_estimate >= 0
    assert r.abs_err_estimate <= 1e-14 * (1 + abs(r.value))
    ref = ref_li2(z)
    assert abs(r.value - ref) <= 1e-14 * (1 + abs(ref))


@settings(max_examples=200, deadline=None)
@given(finite, finite)
def test_li2_conjugation(x, y):
    z = complex(x, y)
    if y == 0 and x >= 1:
        return
    assert abs(li2(z.conjugate()) - li2(z).conjugate()) < 1e-13 * (1 + abs(li2(z)))


def test_inversion_identity_random():
    rng = np.random.default_rng(1)
    zs = rng.uniform(-5, 5, 500) + 1j * rng.uniform(-5, 5, 500)
    worst = 0.0
    for z in zs:
        z = complex(z)
        lg = log_principal(-z)
        res = li2(1 / z) + li2(z) + PI2_6 + 0.5 * lg * lg
        worst = max(worst, abs(res))
    assert worst < 1e-12


def test_reflection_identity_random():
    rng = np.random.default_rng(2)
    zs = rng.uniform(-5, 5, 500) + 1j * rng.uniform(-5, 5, 500)
    worst = 0.0
    for z in zs:
        z = complex(z)
        res = li2(1 - z) + li2(z) - PI2_6 + log_principal(z) * log_principal(1 - z)
        worst = max(worst, abs(res))
    assert worst < 1e-12


def test_growth_bound_in_unit_disc():
    rng = np.random.default_rng(3)
    r = np.sqrt(rng.uniform(0, 1, 400))
    t = rng.uniform(-math.pi, math.pi, 400)
    for rr, tt in zip(r, t):
        z = cmath.rect(rr, tt)
        assert abs(li2(z)) <= abs(z) * PI2_6 * (1 + 1e-15)


# --- unit circle, Clausen, B2 ---


def test_bernoulli_b2_examples():
    assert bernoulli_b2(0) == pytest.approx(1 / 6, abs=1e-16)
    assert bernoulli_b2(0.5) == pytest.approx(-1 / 12, abs=1e-16)
    assert bernoulli_b2(1) == pytest.approx(1 / 6, abs=1e-16)


def test_unit_circle_examples():
    assert abs(li2_unit_circle(0) - PI2_6) < 1e-15
    assert abs(li2_unit_circle(0.5) + math.pi ** 2 / 12) < 1e-15
    v = li2_unit_circle(1 / 6)
    assert abs(v - complex(math.pi ** 2 * bernoulli_b2(1 / 6), KAPPA)) < 1e-15


def test_unit_circle_consistency_grid():
    xs = (np.arange(1000) + 0.5) / 1000
    worst = max(abs(li2(cmath.exp(2j * math.pi * x)) - li2_unit_circle(x)) for x in xs)
    assert worst < 1e-11


def test_clausen_examples():
    assert clausen(0) == 0
    assert abs(clausen(math.pi / 3) - 1.0149416) < 1e-7
    catalan = float(mpmath.catalan)
    assert abs(clausen(math.pi / 2) - catalan) < 1e-14


def test_clausen_against_mpmath():
    for t in np.linspace(-20, 20, 301):
        ref = float(mpmath.clsin(2, t))
        assert abs(clausen(t) - ref) < 1e-14


def test_clausen_large_argument_reduction():
    t = 1e9 + 0.5
    with mpmath.workdps(40):
        ref = float(mpmath.clsin(2, mpmath.mpf(t)))
    assert abs(clausen(t) - ref) < 1e-13


def test_kappa_is_maximum():
    ts = np.linspace(0.01, math.pi - 0.01, 2001)
    assert max(clausen(t) for t in ts) <= KAPPA + 1e-15


def test_clausen_bound_dense_grid():
    ts = np.linspace(-math.pi, math.pi, 4001)[1:-1]
    for t in ts:
        if t == 0:
            continue
        a = abs(t)
        assert abs(clausen(t)) <= a - a * math.log(a) + a ** 3 / 54 + 1e-15


def test_clausen_duplication_grid():
    ts = np.linspace(-3, 3, 1201)
    worst = max(abs(2 * clausen(t) - 2 * clausen(math.pi - t) - clausen(2 * t)) for t in ts)
    assert worst < 1e-13


@settings(max_examples=200, deadline=None)
@given(st.floats(-1e6, 1e6, allow_nan=False))
def test_clausen_odd_and_periodic(t):
    assert clausen(-t) == pytest.approx(-clausen(t), abs=1e-13)
    assert clausen(t + 2 * math.pi) == pytest.approx(clausen(t), abs=1e-9)
