"""Independent checks on the zeros of phi_{A,B}.

Three oracles that share no Newton machinery with zero_finder:
implicit-curve intersection in polar coordinates, argument-principle
counting along a keyhole contour, and a zooming grid search.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .branch import BranchIndex, as_branch, phi
from .errors import ConvergenceError, DomainError, InconclusiveError, UnsupportedBranchError
from .special_fn import KAPPA, li2
from .zero_finder import approx_zero_b0, has_zero, polar_rectangle

TWO_PI = 2 * math.pi
FOUR_PI2 = 4 * math.pi ** 2


@dataclass(frozen=True)
class CurveSample:
    param: float
    value: float
    residual: float


@dataclass(frozen=True)
class WindingReport:
    branch: BranchIndex
    count: int
    min_phase_step: float
    contour_points: int
    max_phase_step: float = 0.0
    winding: float = 0.0
    inconclusive: bool = False

    def to_dict(self) -> dict:
        return {
            "A": self.branch.A,
            "B": self.branch.B,
            "count": self.count,
            "expected": expected_count(self.branch),
            "winding": self.winding,
            "min_phase_step": self.min_phase_step,
            "max_phase_step": self.max_phase_step,
            "contour_points": self.contour_points,
            "inconclusive": self.inconclusive,
        }


def expected_count(b) -> int:
    return 1 if has_zero(b) else 0


# --- implicit curves ------------------------------------------------------


def _I(B: int, theta: float, r: float) -> float:
    return li2(cmath.rect(r, theta)).imag + TWO_PI * B * math.log(r)


def _R(A: int, B: int, r: float, theta: float) -> float:
    return li2(cmath.rect(r, theta)).real + FOUR_PI2 * A - TWO_PI * B * theta


def curve_g(B: int, theta: float) -> CurveSample:
    """The r solving Im Li2(r e^{i theta}) + 2 pi B log r = 0."""
    if B < 1:
        raise UnsupportedBranchError("curve_g requires B >= 1")
    if theta == 0 or abs(theta) >= math.pi:
        raise DomainError("curve_g requires 0 < |theta| < pi")
    lo = math.exp(-KAPPA / (TWO_PI * B))
    hi = math.exp(KAPPA / (math.pi * (2 * B - 1)))
    # I is increasing in r; widen only if rounding puts a root on the edge
    while _I(B, theta, lo) > 0:
        lo *= 0.9
    while _I(B, theta, hi) < 0:
        hi *= 1.1
    r = brentq(lambda x: _I(B, theta, x), lo, hi, xtol=1e-16, rtol=4 * 2.0 ** -52, maxiter=200)
    return CurveSample(theta, r, _I(B, theta, r))


def curve_h(b, r: float) -> CurveSample:
    """The theta solving Re Li2(r e^{i theta}) + 4 pi^2 A - 2 pi B theta = 0."""
    A, B = as_branch(b)
    if B < 1 or not has_zero((A, B)):
        raise UnsupportedBranchError(f"curve_h: branch {(A, B)} has no polar rectangle")
    if not 0.8 < r < 2:
        raise DomainError("curve_h requires 0.8 < r < 2")
    f = lambda t: _R(A, B, r, t)
    if f(-math.pi) <= 0 or f(math.pi) >= 0:
        raise DomainError(f"curve_h: no solution for {(A, B)} at r = {r}")
    t = brentq(f, -math.pi, math.pi, xtol=1e-16, rtol=4 * 2.0 ** -52, maxiter=200)
    return CurveSample(r, t, f(t))


def curve_g_slope(B: int, theta: float, r: float) -> float:
    u = 1 - cmath.rect(r, theta)
    return r * math.log(abs(u)) / (TWO_PI * B - cmath.phase(u))


def curve_h_slope(b, r: float, theta: float) -> float:
    A, B = as_branch(b)
    u = 1 - cmath.rect(r, theta)
    return -math.log(abs(u)) / (r * (TWO_PI * B - cmath.phase(u)))


def curve_intersection_zero(b, tol: float = 1e-12, max_sweeps: int = 200) -> complex:
    """Alternate r <- g(theta), theta <- h(r) until both residuals are below tol."""
    b = as_branch(b)
    rect = polar_rectangle(b)
    theta = 0.5 * (rect.theta1 + min(rect.theta2, math.pi - 1e-9))
    for _ in range(max_sweeps):
        r = curve_g(b.B, theta).value
        theta_new = curve_h(b, r).value
        ri = _I(b.B, theta_new, r)
        rr = _R(b.A, b.B, r, theta_new)
        done = abs(theta_new - theta) <= 4e-16 * math.pi
        theta = theta_new
        if done or (abs(ri) < tol and abs(rr) < tol):
            return cmath.rect(r, theta)
    raise ConvergenceError(f"curve_intersection_zero{tuple(b)}: no convergence in {max_sweeps} sweeps")


# --- argument principle ---------------------------------------------------


def _pieces(B: int, T: float, eps: float, delta: float):
    """Closed positively oriented contour as parameterized pieces t in [0, 1]."""
    d = min(delta, 0.5 * eps)
    e = math.sqrt(eps * eps - d * d)
    tx = math.sqrt(T * T - d * d)
    a0 = math.asin(d / T)
    b0 = math.asin(d / eps)

    def hseg(x0, x1, y, geometric_from=None):
        # geometric spacing in the distance from a branch point keeps long
        # segments resolvable with few samples
        if geometric_from is None:
            return lambda t: complex(x0 + (x1 - x0) * t, y)
        p = geometric_from
        d0, d1 = abs(x0 - p), abs(x1 - p)
        sgn = 1.0 if x0 >= p else -1.0
        return lambda t: complex(p + sgn * d0 * (d1 / d0) ** t, y)

    def arc(c, rad, t0, t1):
        return lambda t: c + cmath.rect(rad, t0 + (t1 - t0) * t)

    pieces = [hseg(1 + e, 1 + tx, d, geometric_from=1.0)]
    if B == 0:
        pieces.append(arc(1.0, T, a0, TWO_PI - a0))
    else:
        pieces += [
            arc(1.0, T, a0, math.pi - a0),
            hseg(1 - tx, -e, d, geometric_from=0.0),
            arc(0.0, eps, math.pi - b0, -math.pi + b0),
            hseg(-e, 1 - tx, -d, geometric_from=0.0),
            arc(1.0, T, math.pi + a0, TWO_PI - a0),
        ]
    pieces += [
        hseg(1 + tx, 1 + e, -d, geometric_from=1.0),
        arc(1.0, eps, -b0, -TWO_PI + b0),
    ]
    return pieces


def _trace_piece(f, path, n0: int, target: float, max_rounds: int):
    ts = list(np.linspace(0.0, 1.0, n0))
    vs = [f(path(t)) for t in ts]
    for _ in range(max_rounds):
        new_ts, new_vs = [ts[0]], [vs[0]]
        split = False
        for i in range(1, len(ts)):
            step = abs(cmath.phase(vs[i] / vs[i - 1]))
            if step > target and ts[i] - ts[i - 1] > 1e-15:
                tm = 0.5 * (ts[i - 1] + ts[i])
                new_ts.append(tm)
                new_vs.append(f(path(tm)))
                split = True
            new_ts.append(ts[i])
            new_vs.append(vs[i])
        ts, vs = new_ts, new_vs
        if not split:
            break
    return vs


def default_radius(b) -> float:
    A, B = as_branch(b)
    rho = abs(approx_zero_b0(A)) if (B == 0 and A >= 1) else 1.0
    return 4 * max(2.0, rho + 1)


def winding_count(
    b,
    T: float | None = None,
    eps: float = 1e-4,
    delta: float = 1e-4,
    n0: int = 64,
    max_rounds: int = 40,
) -> WindingReport:
    """Argument-principle zero count of phi_{A,B} inside the keyhole contour."""
    b = as_branch(b)
    if T is None:
        T = default_radius(b)
    f = lambda z: phi(b, z)
    values = []
    for path in _pieces(b.B, T, eps, delta):
        vs = _trace_piece(f, path, n0, math.pi / 4, max_rounds)
        if values and vs:
            vs = vs[1:] if vs[0] == values[-1] else vs
        values.extend(vs)
    values.append(values[0])
    arr = np.asarray(values, dtype=complex)
    bad = not np.all(np.isfinite(arr)) or np.any(arr == 0)
    steps = np.angle(arr[1:] / arr[:-1]) if not bad else np.array([math.pi])
    total = float(np.sum(steps)) / TWO_PI
    max_step = float(np.max(np.abs(steps)))
    inconclusive = bad or max_step >= math.pi / 2 or abs(total - round(total)) > 1e-6
    return WindingReport(
        branch=b,
        count=int(round(total)),
        min_phase_step=float(np.min(np.abs(steps))),
        contour_points=len(values) - 1,
        max_phase_step=max_step,
        winding=total,
        inconclusive=bool(inconclusive),
    )


# --- brute force ----------------------------------------------------------


def _grid_min(f, rs, ts):
    vals = np.array([[abs(f(cmath.rect(r, t))) for t in ts] for r in rs])
    i, j = np.unravel_index(int(np.argmin(vals)), vals.shape)
    return int(i), int(j), vals


def _quad_fit(points: list[complex], vals: np.ndarray) -> complex | None:
    # least-squares paraboloid through |phi|^2, which is quadratic near a simple zero
    x = np.array([p.real for p in points])
    y = np.array([p.imag for p in points])
    x0, y0 = x.mean(), y.mean()
    s = max(np.ptp(x), np.ptp(y), 1e-300)
    u, v = (x - x0) / s, (y - y0) / s
    M = np.column_stack([u * u, u * v, v * v, u, v, np.ones_like(u)])
    coef, *_ = np.linalg.lstsq(M, vals ** 2, rcond=None)
    a, bb, c, d, e, _ = coef
    H = np.array([[2 * a, bb], [bb, 2 * c]])
    if np.linalg.det(H) <= 0 or a <= 0:
        return None
    uu, vv = np.linalg.solve(H, [-d, -e])
    return complex(x0 + s * uu, y0 + s * vv)


def brute_force_zero(
    b,
    r_lo: float,
    r_hi: float,
    theta_lo: float,
    theta_hi: float,
    n: int = 64,
    levels: int = 12,
    zoom_n: int = 16,
) -> complex:
    """Grid minimum of |phi| over a polar box, zoomed and polished by a quadratic fit."""
    b = as_branch(b)
    if n < 16 or not r_lo < r_hi or theta_lo > theta_hi:
        raise DomainError("brute_force_zero: need n >= 16 and a valid polar box")
    f = lambda z: phi(b, z)
    one_d = theta_lo == theta_hi
    rs = np.linspace(r_lo, r_hi, n)
    ts = np.array([theta_lo]) if one_d else np.linspace(theta_lo, theta_hi, n)
    i, j, vals = _grid_min(f, rs, ts)
    if i in (0, len(rs) - 1) or (not one_d and j in (0, len(ts) - 1)):
        raise InconclusiveError("brute_force_zero: minimum on the boundary of the box")
    for _ in range(levels):
        dr = rs[1] - rs[0]
        rs = np.linspace(rs[i] - dr, rs[i] + dr, zoom_n + 1)
        if not one_d:
            dt = ts[1] - ts[0]
            ts = np.linspace(ts[j] - dt, ts[j] + dt, zoom_n + 1)
        i, j, vals = _grid_min(f, rs, ts)
        i = min(max(i, 1), len(rs) - 2)
        if not one_d:
            j = min(max(j, 1), len(ts) - 2)
    if one_d:
        # phi is real on the negative axis for B = 0; interpolate the sign change
        x = [cmath.rect(r, ts[0]) for r in rs[i - 1 : i + 2]]
        y = [f(z).real for z in x]
        for k in range(2):
            if y[k] == 0:
                return x[k]
            if y[k] * y[k + 1] < 0:
                return x[k] + (x[k + 1] - x[k]) * y[k] / (y[k] - y[k + 1])
        return x[1]
    pts = [cmath.rect(r, t) for r in rs[i - 1 : i + 2] for t in ts[j - 1 : j + 2]]
    local = vals[i - 1 : i + 2, j - 1 : j + 2].ravel()
    z = _quad_fit(pts, local)
    best = cmath.rect(rs[i], ts[j])
    if z is None or abs(z - best) > 2 * max(abs(p - best) for p in pts):
        return best
    return z if abs(f(z)) <= abs(f(best)) else best
