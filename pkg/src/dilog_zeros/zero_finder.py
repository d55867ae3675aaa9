"""Zeros of phi_{A,B}: existence, starting points, Newton iteration, certificates.

Each branch has at most one zero.  For B = 0 the zero lies on the negative
real axis near -exp(pi sqrt(8A - 1/3)); for B >= 1 it sits in a thin polar
rectangle hugging the unit circle near exp(2 pi i A / B).  Negative B is
handled by conjugation only.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .branch import BranchIndex, as_branch, phi_derivative, phi_eval
from .errors import ConvergenceError, NewtonStepError, UnsupportedBranchError
from .special_fn import KAPPA, bernoulli_b2, clausen

TOL_FLOOR = 1e-14
MAX_ITER = 64
_EXTRA_STEPS = 2


@dataclass(frozen=True)
class PolarRectangle:
    r1: float
    r2: float
    theta1: float
    theta2: float

    def contains(self, z: complex, strict: bool = False) -> bool:
        r, t = abs(z), cmath.phase(z)
        if strict:
            return self.r1 < r < self.r2 and self.theta1 < t < self.theta2
        return self.r1 <= r <= self.r2 and self.theta1 <= t <= self.theta2

    def contains_convex(self, z: complex, slack: float = 0.0) -> bool:
        """Membership in the hull with the inner arc replaced by its chord."""
        r, t = abs(z), cmath.phase(z)
        if r > self.r2 + slack or t < self.theta1 - slack or t > self.theta2 + slack:
            return False
        half = 0.5 * (self.theta2 - self.theta1)
        mid = 0.5 * (self.theta1 + self.theta2)
        return r * math.cos(t - mid) >= self.r1 * math.cos(half) - slack


@dataclass
class ZeroCertificate:
    branch: BranchIndex
    zero: complex
    error_radius: float
    iterations: list[complex]
    contraction_constant: float
    apriori_bound: float = 0.0
    aposteriori_bound: float = 0.0
    rounding_bound: float = 0.0
    tol: float = 0.0
    tol_clamped: bool = False
    tol_met: bool = True
    region_flags: list[bool] = field(default_factory=list)

    @property
    def region_violations(self) -> list[int]:
        return [n for n, ok in enumerate(self.region_flags) if not ok]

    def conjugate(self) -> "ZeroCertificate":
        A, B = self.branch
        return ZeroCertificate(
            BranchIndex(A, -B),
            self.zero.conjugate(),
            self.error_radius,
            [c.conjugate() for c in self.iterations],
            self.contraction_constant,
            self.apriori_bound,
            self.aposteriori_bound,
            self.rounding_bound,
            self.tol,
            self.tol_clamped,
            self.tol_met,
            list(self.region_flags),
        )

    def to_dict(self) -> dict:
        return {
            "A": self.branch.A,
            "B": self.branch.B,
            "zero": self.zero,
            "error_radius": self.error_radius,
            "iterations": len(self.iterations) - 1,
            "trace": list(self.iterations),
            "contraction_constant": self.contraction_constant,
            "apriori_bound": self.apriori_bound,
            "aposteriori_bound": self.aposteriori_bound,
            "rounding_bound": self.rounding_bound,
            "tol": self.tol,
            "tol_clamped": self.tol_clamped,
            "tol_met": self.tol_met,
            "region_violations": self.region_violations,
        }


def has_zero(b) -> bool:
    A, B = as_branch(b)
    if B == 0:
        return A >= 0
    return -abs(B) < 2 * A <= abs(B)


def _require_zero(b) -> BranchIndex:
    b = as_branch(b)
    if not has_zero(b):
        raise UnsupportedBranchError(
            f"no zero on branch {b}: requires B = 0 and A >= 0, or -|B|/2 < A <= |B|/2"
        )
    return b


def _require_rect_branch(b) -> BranchIndex:
    b = as_branch(b)
    if b.B < 1 or not has_zero(b):
        raise UnsupportedBranchError(f"branch {b}: requires B >= 1 and -B/2 < A <= B/2")
    return b


def approx_zero_b0(A: int) -> complex:
    if A < 1:
        raise UnsupportedBranchError("approx_zero_b0 requires A >= 1")
    return complex(-math.exp(math.pi * math.sqrt(8 * A - 1 / 3)), 0.0)


def initial_guess(b) -> complex:
    A, B = _require_zero(b)
    if B == 0:
        return 0j if A == 0 else approx_zero_b0(A)
    if B < 0:
        return initial_guess((A, -B)).conjugate()
    if A == 0:
        return cmath.exp(1j * math.pi / (12 * B))
    if 2 * A == B:
        # exp(i pi) can round to the lower edge of the cut; -1 + 0i reads as arg pi
        return complex(-1.0, 0.0)
    return cmath.exp(1j * (2 * math.pi * A / B))


def newton_step(b, c: complex) -> complex:
    b = as_branch(b)
    try:
        d = phi_derivative(b, c)
    except ValueError as exc:
        raise NewtonStepError(str(exc)) from exc
    if d == 0 or not cmath.isfinite(d):
        raise NewtonStepError(f"derivative vanishes or is undefined at {c}")
    return c - phi_eval(b, c).value / d


def polar_rectangle(b) -> PolarRectangle:
    A, B = _require_rect_branch(b)
    if A < 0:
        r1, r2 = 1.0, math.exp(KAPPA / (math.pi * (2 * B - 1)))
    else:
        r1, r2 = math.exp(-KAPPA / (2 * math.pi * B)), 1.0
    t1 = math.pi * (2 * A - 1 / 8) / B if A != 0 else math.pi / (24 * B)
    t2 = math.pi * (2 * A + 1 / 8) / B if 2 * A != B else math.pi
    return PolarRectangle(r1, r2, t1, t2)


def approx_zero_first_order(b) -> complex:
    A, B = _require_rect_branch(b)
    t = 2 * math.pi * A / B
    corr = complex(-clausen(t), math.pi ** 2 * bernoulli_b2(abs(A) / B)) / (2 * math.pi * B)
    return cmath.exp(1j * t) * (1 + corr)


def _constants(A: int, B: int) -> tuple[float, float]:
    """(K, e0): one-step contraction constant and initial distance bound."""
    if B == 0:
        return 1 / (2 * math.pi * math.sqrt(A)), 1 / math.sqrt(A)
    if A != 0:
        return 0.76 * B, 6 / (5 * B)
    return 2.51 * B, 1 / (3 * B)


def _apriori(A: int, B: int, n: int) -> float:
    if B == 0:
        return 2 * math.pi * math.sqrt(A) * math.exp(-(2.0 ** n) * math.log(2 * math.pi * A))
    return 1.25 * math.exp((2.0 ** n) * math.log(0.95))


def _rounding(b: BranchIndex, c: complex) -> float:
    """Radius certifiable from the final residual, counting evaluation error."""
    ev = phi_eval(b, c)
    d = abs(phi_derivative(b, c))
    return 2 * (abs(ev.value) + ev.abs_err_estimate) / d + 2.0 ** -52 * abs(c)


def _region_check(b: BranchIndex):
    A, B = b
    if B == 0:
        D = -approx_zero_b0(A).real
        lo, hi = -D - 1 / math.sqrt(A), -D + 1 / math.sqrt(A)
        return lambda c: abs(c.imag) == 0.0 and lo <= c.real <= hi
    rect = polar_rectangle(b)
    return lambda c: rect.contains_convex(c, slack=1e-12)


def find_zero(b, tol: float = 1e-12) -> ZeroCertificate:
    """Newton iteration from initial_guess with a certified error radius."""
    b = _require_zero(b)
    A, B = b
    clamped = tol < TOL_FLOOR
    tol_eff = max(tol, TOL_FLOOR)
    if A == 0 and B == 0:
        return ZeroCertificate(b, 0j, 0.0, [0j], 0.0, 0.0, 0.0, 0.0, tol, clamped, True, [True])
    if B < 0:
        cert = find_zero((A, -B), tol)
        return cert.conjugate()

    K, e0 = _constants(A, B)
    inside = _region_check(b)
    c = initial_guess(b)
    trace = [c]
    # chain[n] bounds |rho - c_n| through the contraction e_{n+1} <= K e_n^2
    chain = e0
    apost = math.inf
    n = 0
    extra = None
    while True:
        apri = min(_apriori(A, B, n), chain, apost)
        if extra is None and apri <= tol_eff:
            extra = _EXTRA_STEPS
        if extra == 0:
            break
        if n >= MAX_ITER:
            raise ConvergenceError(f"find_zero{b}: no certificate after {MAX_ITER} steps")
        c_next = newton_step(b, c)
        delta = abs(c_next - c)
        # |rho - c_n| <= 2 delta once 4 K delta < 1 and c_n is in the basin
        apost = K * (2 * delta) ** 2 if 4 * K * delta < 1 and chain < 1 / (2 * K) else math.inf
        chain = K * chain * chain
        c = c_next
        trace.append(c)
        n += 1
        if extra is not None:
            extra -= 1

    apri_final = min(_apriori(A, B, n), chain)
    radius_math = min(apri_final, apost)
    rnd = _rounding(b, c)
    radius = max(radius_math, rnd)
    return ZeroCertificate(
        branch=b,
        zero=c,
        error_radius=radius,
        iterations=trace,
        contraction_constant=K,
        apriori_bound=apri_final,
        aposteriori_bound=apost,
        rounding_bound=rnd,
        tol=tol,
        tol_clamped=clamped,
        # binary64 rounding can dominate for huge |rho| (B = 0, large A)
        tol_met=radius <= tol_eff,
        region_flags=[inside(x) for x in trace],
    )
