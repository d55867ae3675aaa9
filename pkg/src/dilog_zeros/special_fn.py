"""Principal-branch dilogarithm, Clausen function and friends.

All evaluation is in binary64.  The principal logarithm has its cut on
(-inf, 0] with arg in (-pi, pi]; the dilogarithm has its cut on [1, inf)
and returns the lower-edge limit for real arguments on the cut.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath

from .errors import DomainError

EPS = 2.0 ** -52
PI2_6 = math.pi ** 2 / 6
TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class EvalResult:
    value: complex
    abs_err_estimate: float


def _bernoulli(n: int) -> float:
    return float(mpmath.bernoulli(n))


# Li2(z) = w - w^2/4 + sum_k B_2k w^(2k+1)/(2k+1)!,  w = -log(1-z)
_BW = [_bernoulli(2 * k) / math.factorial(2 * k + 1) for k in range(1, 31)]
# Cl2(t) = t - t log|t| + sum_n |B_2n| t^(2n+1) / (2n (2n+1)!)
_CL = [abs(_bernoulli(2 * n)) / (2 * n * math.factorial(2 * n + 1)) for n in range(1, 31)]


def log_principal(z: complex) -> complex:
    """log|z| + i arg z, arg in (-pi, pi]; negative reals get +i*pi."""
    z = complex(z)
    if z == 0:
        raise DomainError("log_principal: z = 0")
    if z.imag == 0.0:
        if z.real > 0:
            return complex(math.log(z.real), 0.0)
        return complex(math.log(-z.real), math.pi)
    return cmath.log(z)


def _series(z: complex) -> tuple[complex, float]:
    # direct series, |z| <= 1/2
    a = abs(z)
    if a == 0.0:
        return 0j, 0.0
    n = min(60, max(2, int(math.log(1e-18) / math.log(a)) + 2)) if a < 1 else 60
    acc = 0j
    for k in range(n, 0, -1):
        acc = acc * z + 1.0 / (k * k)
    v = acc * z
    return v, 4 * EPS * (abs(v) + a)


def _bernoulli_region(z: complex) -> tuple[complex, float]:
    w = -log_principal(1 - z)
    w2 = w * w
    acc = 0j
    for c in reversed(_BW):
        acc = acc * w2 + c
    v = w - w2 / 4 + acc * w2 * w
    return v, 8 * EPS * (abs(w) + abs(w2) / 4 + abs(v))


def _li2(z: complex) -> tuple[complex, float]:
    a = abs(z)
    if a <= 0.5:
        return _series(z)
    if a >= 2.0:
        # Li2(z) = -Li2(1/z) - pi^2/6 - log^2(-z)/2
        v, e = _series(1 / z)
        lg = log_principal(-z)
        h = 0.5 * lg * lg
        val = -v - PI2_6 - h
        return val, e + 4 * EPS * (abs(h) + PI2_6 + abs(val))
    if z == 1:
        return complex(PI2_6, 0.0), EPS * PI2_6
    u = 1 - z
    au = abs(u)
    if au <= 0.5 or au >= 2.0:
        # Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z)
        v, e = _li2(u)
        p = log_principal(z) * log_principal(u)
        val = PI2_6 - p - v
        return val, e + 4 * EPS * (abs(p) + PI2_6 + abs(val))
    return _bernoulli_region(z)


def li2_principal(z: complex) -> EvalResult:
    """Principal dilogarithm with an absolute error estimate."""
    v, e = _li2(complex(z))
    return EvalResult(v, e)


def li2(z: complex) -> complex:
    """Value-only shortcut for li2_principal."""
    return _li2(complex(z))[0]


def bernoulli_b2(x: float) -> float:
    return x * x - x + 1.0 / 6.0


def _reduce_angle(theta: float) -> float:
    if -math.pi < theta <= math.pi:
        return theta
    # one extended-precision step: theta - 2 pi * nint(theta / 2 pi)
    bits = max(0, math.frexp(theta)[1]) + 80
    with mpmath.workprec(bits):
        t = mpmath.mpf(theta)
        tp = 2 * mpmath.pi
        r = t - tp * mpmath.nint(t / tp)
        r = float(r)
    if r <= -math.pi:
        r += TWO_PI
    return r


def clausen(theta: float) -> float:
    """Cl2(theta) = -int_0^theta log|2 sin(x/2)| dx."""
    t = _reduce_angle(float(theta))
    if t == 0.0:
        return 0.0
    at = abs(t)
    t2 = t * t
    acc = 0.0
    for c in reversed(_CL):
        acc = acc * t2 + c
    return t - t * math.log(at) + acc * t2 * t


KAPPA = clausen(math.pi / 3)


def li2_unit_circle(x: float) -> complex:
    """Li2(e^{2 pi i x}) from the Bernoulli/Clausen closed forms."""
    f = x - math.floor(x)
    g = f - 1.0 if f > 0.5 else f
    return complex(math.pi ** 2 * bernoulli_b2(f), clausen(TWO_PI * g))
