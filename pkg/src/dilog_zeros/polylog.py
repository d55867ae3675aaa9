"""Zeros of the polylogarithm Li_s beyond s = 2.

For s = -m the zeros are those of the Eulerian polynomial A_m (plus 0).
For Re(s) < 0 we work in the variable w with z = -exp(pi w), where a
Poisson-summation series F(w) = sum_k ((2k-1)i - w)^(s-1) has the same zeros
as Li_s(z) away from the origin.  For Re(s) > 0 Li_s is evaluated from its
Bose-Einstein type integral along a rotated ray.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np
from scipy.integrate import quad_vec
from scipy.special import loggamma

from .errors import ConvergenceError, DomainError
from .special_fn import EvalResult

EPS = 2.0 ** -52
TWO_PI = 2 * math.pi


# --- Eulerian polynomials -------------------------------------------------


@dataclass(frozen=True)
class EulerianPolynomial:
    m: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def sign_at(self, x: float) -> int:
        """Exact sign of A_m(x) for a binary64 x."""
        p, q = x.as_integer_ratio()
        d = self.degree
        acc = self.coeffs[d]
        qk = 1
        for k in range(d - 1, -1, -1):
            qk *= q
            acc = acc * p + self.coeffs[k] * qk
        return (acc > 0) - (acc < 0)


def eulerian(m: int) -> EulerianPolynomial:
    """A_m from A_{m+1} = (1 + m z) A_m + z (1 - z) A_m'."""
    if not 0 <= m <= 500:
        raise DomainError("eulerian requires 0 <= m <= 500")
    a = [1]
    for n in range(m):
        nxt = [0] * (len(a) + 1)
        for k in range(len(nxt)):
            hi = a[k] if k < len(a) else 0
            lo = a[k - 1] if k >= 1 else 0
            nxt[k] = (k + 1) * hi + (n - k + 1) * lo
        while len(nxt) > 1 and nxt[-1] == 0:
            nxt.pop()
        a = nxt
    return EulerianPolynomial(m, tuple(a))


def sobolev_approx(m: int, j: int) -> float:
    if not 1 <= j <= m - 1:
        raise DomainError("sobolev_approx requires 1 <= j <= m - 1")
    x = math.pi * (2 * j + 1) / (2 * (m + 1))
    return -math.exp(-math.pi * math.cos(x) / math.sin(x))


def sobolev_epsilon(m: int, j: int, lam: float) -> float:
    """The eps_j with lam = -exp(-pi cot(pi (2j + 1 + eps)/(2(m + 1))))."""
    c = -math.log(-lam) / math.pi
    x = math.atan2(1.0, c)  # arccot into (0, pi)
    return 2 * (m + 1) * x / math.pi - 2 * j - 1


def sobolev_K(m: int, M: float) -> float:
    if M <= 1 or m < 1:
        raise DomainError("sobolev_K requires M > 1 and m >= 1")
    l2 = math.log(M) ** 2
    p2 = math.pi ** 2
    return (1 + 0.25 * math.sqrt(9 * p2 + l2)) * ((p2 + l2) / (9 * p2 + l2)) ** ((m + 1) / 2)


def _bisect_sign(P: EulerianPolynomial, u_lo: float, u_hi: float) -> float:
    # bisection in u = log|x| on the negative axis with exact signs
    s_lo = P.sign_at(-math.exp(u_lo))
    for _ in range(200):
        u_mid = 0.5 * (u_lo + u_hi)
        if u_mid in (u_lo, u_hi):
            break
        x_mid = -math.exp(u_mid)
        s = P.sign_at(x_mid)
        if s == 0:
            return x_mid
        if s == s_lo:
            u_lo = u_mid
        else:
            u_hi = u_mid
        if -math.exp(u_lo) == -math.exp(u_hi) or abs(math.exp(u_hi) - math.exp(u_lo)) <= EPS * math.exp(u_lo):
            break
    return -math.exp(0.5 * (u_lo + u_hi))


def _roots_in(P: EulerianPolynomial, edges: Sequence[float]) -> list[float] | None:
    roots = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        if P.sign_at(-math.exp(lo)) * P.sign_at(-math.exp(hi)) >= 0:
            return None
        roots.append(_bisect_sign(P, lo, hi))
    return roots


def eulerian_zeros(m: int) -> list[float]:
    """Zeros of A_m, ascending: lambda_{m-1} < ... < lambda_1 < 0."""
    if not 1 <= m <= 60:
        raise DomainError("eulerian_zeros requires 1 <= m <= 60")
    if m == 1:
        return []
    P = eulerian(m)
    us = [math.log(-sobolev_approx(m, j)) for j in range(1, m)]
    edges = [us[0] - 50.0] + [0.5 * (a + b) for a, b in zip(us[:-1], us[1:])] + [us[-1] + 50.0]
    roots = _roots_in(P, edges)
    if roots is None:
        # interlacing with the zeros of A_{m-1}
        inner = [math.log(-x) for x in reversed(eulerian_zeros(m - 1))]
        roots = _roots_in(P, [us[0] - 50.0] + inner + [us[-1] + 50.0])
        if roots is None:
            raise ConvergenceError(f"eulerian_zeros({m}): could not bracket the zeros")
    return sorted(roots)


def li_neg_m(m: int, z: complex) -> complex:
    """Li_{-m}(z) = z A_m(z)/(1 - z)^(m + 1)."""
    if not 0 <= m <= 60:
        raise DomainError("li_neg_m requires 0 <= m <= 60")
    z = complex(z)
    if z == 1:
        raise DomainError("li_neg_m: pole at z = 1")
    # exact rational arithmetic, rounded once at the end; Horner in binary64
    # cancels badly for z < 0
    x, y = Fraction(z.real), Fraction(z.imag)
    nr, ni = Fraction(0), Fraction(0)
    for c in reversed(eulerian(m).coeffs):
        nr, ni = nr * x - ni * y + c, nr * y + ni * x
    nr, ni = nr * x - ni * y, nr * y + ni * x
    dr, di = Fraction(1), Fraction(0)
    for _ in range(m + 1):
        dr, di = dr * (1 - x) + di * y, di * (1 - x) - dr * y
    q = dr * dr + di * di
    return complex(float((nr * dr + ni * di) / q), float((ni * dr - nr * di) / q))


# --- Lipschitz series, Re(s) < 0 -----------------------------------------


def reduce_w(w: complex) -> complex:
    """Shift Im w into (-1, 1]; F is 2i-periodic."""
    y = w.imag
    n = math.ceil((y - 1) / 2)
    return complex(w.real, y - 2 * n) if n else w


# B_2p/(2p)! for the Euler-Maclaurin tail
_EM = [float(mpmath.bernoulli(2 * p) / mpmath.factorial(2 * p)) for p in range(1, 9)]


def _em_tail(c: complex, e: complex, K: int) -> tuple[complex, float]:
    """sum_{k>K} (c + 2ik)^e + sum_{m>=K} (c - 2im)^e by Euler-Maclaurin.

    Returns the tail and the size of the last correction used.
    """
    total, last = 0j, 0.0
    for d, a in ((2j, K + 1), (-2j, K)):
        x = c + d * a
        lx = cmath.log(x)
        # x stays in one half-plane along the ray, so the principal log is smooth
        val = -cmath.exp((e + 1) * lx) / (d * (e + 1)) + 0.5 * cmath.exp(e * lx)
        coef = 1 + 0j
        for n in range(1, 2 * len(_EM)):
            coef *= (e - n + 1) * d
            if n % 2:
                term = -_EM[n // 2] * coef * cmath.exp((e - n) * lx)
                val += term
                last = abs(term)
        total += val
    return total, last


def _lip_sum(s: complex, w: complex, K: int):
    """Window -K < k <= K summed directly, the rest by Euler-Maclaurin.

    Returns (F, F', max |term|, sum |term|, tail error estimate).
    """
    k = np.arange(-K + 1, K + 1)
    x = (2 * k - 1) * 1j - w
    lx = np.log(x)
    terms = np.exp((s - 1) * lx)
    c = -1j - w
    t0, e0 = _em_tail(c, s - 1, K)
    t1, e1 = _em_tail(c, s - 2, K)
    F = complex(terms.sum()) + t0
    dF = complex((-(s - 1) * terms / x).sum()) - (s - 1) * t1
    return F, dF, float(np.abs(terms).max()), float(np.abs(terms).sum()), 2 * e0


def _lip_K(s: complex, w: complex, kmax: int | None) -> int:
    """Smallest doubling of K whose tail estimate is below 1e-13 of the largest term."""
    if kmax is not None:
        return int(kmax)
    K = max(16, int(abs(s)) + 1)
    while K < 1 << 16:
        _, _, lead, _, err = _lip_sum(s, w, K)
        if err <= 1e-13 * lead:
            return K
        K *= 2
    return K


def _check_lip(s: complex, w: complex) -> complex:
    if s.real >= 0:
        raise DomainError("Lipschitz series requires Re(s) < 0")
    w = reduce_w(complex(w))
    if w.imag == 1.0 and w.real >= 0:
        raise DomainError("w maps onto the cut [1, inf)")
    return w


def li_s_lipschitz(s: complex, w: complex, kmax: int | None = None) -> EvalResult:
    """F(w) = sum_k ((2k - 1)i - w)^(s - 1) = pi^(1-s)/Gamma(1-s) Li_s(-e^(pi w))."""
    s = complex(s)
    w = _check_lip(s, w)
    K = _lip_K(s, w, kmax)
    F, _, _, total, err = _lip_sum(s, w, K)
    return EvalResult(F, err + 8 * EPS * total)


def li_s_negative(s: complex, z: complex) -> complex:
    """Li_s(z) for Re(s) < 0 through the Lipschitz series."""
    s, z = complex(s), complex(z)
    if z == 0:
        return 0j
    w = cmath.log(-z) / math.pi
    F = li_s_lipschitz(s, w).value
    return F * cmath.exp(loggamma(1 - s) - (1 - s) * math.log(math.pi))


# --- Jonquiere integral, Re(s) > 0 ---------------------------------------


def _ray_angle(s: complex) -> float:
    if s.real <= 1:
        return 0.0
    return max(-1.3, min(1.3, cmath.phase(s - 1)))


def _sector_poles(L: complex, alpha: float) -> list[complex]:
    """Poles Log z + 2 pi i k of 1/(e^t - z) strictly inside the sector 0 < arg t < alpha."""
    a, b = L.real, L.imag
    if a <= 0 or alpha == 0:
        return []
    top = a * math.tan(abs(alpha))
    if alpha > 0:
        k0, k1 = math.floor(-b / TWO_PI) + 1, math.ceil((top - b) / TWO_PI) - 1
    else:
        k0, k1 = math.floor((-top - b) / TWO_PI) + 1, math.ceil(-b / TWO_PI) - 1
    return [complex(a, b + TWO_PI * k) for k in range(k0, k1 + 1)]


def _pole_clearance(L: complex, alpha: float) -> float:
    e = cmath.exp(-1j * alpha)
    best = math.inf
    for k in range(-3, 4):
        q = (L + TWO_PI * 1j * k) * e
        best = min(best, abs(q.imag) if q.real > 0 else abs(q))
    return best


def _nudge(L: complex, alpha: float, ideal: float | None = None) -> float:
    """Keep the ray away from the poles Log z + 2 pi i k.

    Among clear angles, take the one nearest ``ideal``: for large |Im s| a
    ray far from arg(s - 1) cancels away many digits.
    """
    if _pole_clearance(L, alpha) > 0.2:
        return alpha
    ideal = alpha if ideal is None else ideal
    shifts = (0.05, 0.1, 0.15, 0.2, 0.3, 0.5)
    cands = [alpha + sg * d for d in shifts for sg in (1, -1)]
    cands = [c for c in cands if abs(c) <= 1.5]
    clear = [c for c in cands if _pole_clearance(L, c) > 0.2]
    if clear:
        return min(clear, key=lambda c: abs(c - ideal))
    return max(cands, key=lambda c: _pole_clearance(L, c))


def _ray_setup(ss: Sequence[complex], L: np.ndarray, alpha: float):
    """Substitution power for the head, split point and cutoff along the ray."""
    sig = min(s.real for s in ss)
    p = 1.0 / sig if sig < 1 else 1.0
    split = max(1.0, float(np.max(np.abs(L))) + 5.0) if L.size else 1.0
    # |t^(s-1) e^-t| along the ray peaks at u = (sigma - 1)/cos(alpha); cut the
    # tail once it has dropped by e^-50 below the peak (or below 1)
    ca = math.cos(alpha)
    smax = max(s.real for s in ss)
    logmag = lambda u: (smax - 1) * math.log(u) - u * ca
    u_star = max(split, (smax - 1) / ca)
    ref = max(logmag(u_star), 0.0)
    u_end = 2 * u_star + 10
    while logmag(u_end) > ref - 50 and u_end * ca < 700:
        u_end *= 1.5
    return p, split, u_end


def _ray_integrand(ss: Sequence[complex], zs: np.ndarray, alpha: float, p: float):
    """t^(s-1)/(e^t - z) dt along t = u e^(i alpha), and its head-substituted form."""
    e = cmath.exp(1j * alpha)
    sv = np.array(ss)[:, None, None]
    zr = zs[None, None, :]

    def integrand(u):
        u = np.atleast_1d(np.asarray(u, dtype=float))[None, :, None]
        t = u * e
        q = np.exp(-t)
        v = e * np.exp((sv - 1) * np.log(t) - t) / (1 - zr * q)
        return np.where(t.real > 700, 0, v)

    def head(v):
        # u = v^p removes the t^(s-1) endpoint singularity when Re(s) < 1
        v = np.atleast_1d(np.asarray(v, dtype=float))
        return (p * v ** (p - 1))[None, :, None] * integrand(v ** p)

    return integrand, head


def _assemble(ss, L, alpha, total, err):
    out = np.empty_like(total)
    scale = np.empty(total.shape)
    sign = 1.0 if alpha > 0 else -1.0
    poles = [_sector_poles(complex(Lz), alpha) for Lz in L]
    for i, s in enumerate(ss):
        lg = complex(loggamma(s))
        pref = np.exp(L - lg)
        res = np.zeros(L.size, dtype=complex)
        res_abs = np.zeros(L.size)
        for n, tks in enumerate(poles):
            for tk in tks:
                term = cmath.exp((s - 1) * cmath.log(tk) - lg)
                res[n] += term
                res_abs[n] += abs(term)
        out[i] = pref * total[i] + sign * TWO_PI * 1j * res
        scale[i] = np.abs(pref) * err[i] + 8 * EPS * (res_abs + np.abs(pref * total[i]))
    return out, scale


def _jonquiere_batch(
    ss: Sequence[complex],
    zs: np.ndarray,
    alpha: float,
    epsrel: float = 1e-13,
) -> tuple[np.ndarray, np.ndarray]:
    """Li_s(z) for every s in ss and z in zs by adaptive quadrature."""
    ss = [complex(s) for s in ss]
    zs = np.asarray(zs, dtype=complex).ravel()
    L = np.log(zs)
    p, split, u_end = _ray_setup(ss, L, alpha)
    integrand, head = _ray_integrand(ss, zs, alpha, p)
    pieces = [(head, 0.0, 1.0), (integrand, 1.0, split), (integrand, split, u_end)]
    shape = (len(ss), zs.size)
    # a coarse pass fixes per-component weights so that the max-norm error
    # control treats small and large integrals alike
    rough = sum(
        quad_vec(lambda u, f=fn: f(u)[:, 0, :], a, b, epsrel=1e-3, limit=50, norm="max")[0]
        for fn, a, b in pieces
    )
    wgt = 1.0 / np.maximum(np.abs(rough), 1e-300)
    total = np.zeros(shape, dtype=complex)
    err = np.zeros(len(ss))
    for fn, a, b in pieces:
        r, er = quad_vec(
            lambda u, f=fn: f(u)[:, 0, :] * wgt, a, b, epsabs=epsrel, epsrel=epsrel, limit=400, norm="max"
        )
        total += r / wgt
        err += er
    err_abs = err[:, None] / wgt
    return _assemble(ss, L, alpha, total, err_abs)


def _gl_nodes(a: float, b: float, width: float, order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    n = max(1, math.ceil((b - a) / width))
    edges = np.linspace(a, b, n + 1)
    mids = 0.5 * (edges[1:] + edges[:-1])[:, None]
    half = 0.5 * (edges[1:] - edges[:-1])[:, None]
    return (mids + half * x).ravel(), (half * w).ravel()


def _jonquiere_fixed(s: complex, zs: np.ndarray, alpha: float, chunk: int = 2048) -> np.ndarray:
    """Li_s(z) by a fixed composite Gauss-Legendre rule; for coarse phase scans."""
    s = complex(s)
    zs = np.asarray(zs, dtype=complex).ravel()
    L = np.log(zs)
    p, split, u_end = _ray_setup([s], L, alpha)
    parts = [_gl_nodes(0.0, 1.0, 0.5, 20), _gl_nodes(1.0, split, 0.5, 16), _gl_nodes(split, u_end, 2.0, 16)]
    total = np.zeros((1, zs.size), dtype=complex)
    for lo in range(0, zs.size, chunk):
        sub = zs[lo : lo + chunk]
        integrand, head = _ray_integrand([s], sub, alpha, p)
        acc = np.zeros(sub.size, dtype=complex)
        for k, (x, w) in enumerate(parts):
            f = head if k == 0 else integrand
            acc += np.einsum("n,nz->z", w, f(x)[0])
        total[0, lo : lo + chunk] = acc
    out, _ = _assemble([s], L, alpha, total, np.zeros((1, zs.size)))
    return out[0]


def _check_jonq(s: complex, z: complex):
    if s.real <= 0:
        raise DomainError("Jonquiere integral requires Re(s) > 0")
    if z.imag == 0 and z.real >= 1:
        raise DomainError("z lies on the cut [1, inf)")


def li_s_jonquiere(s: complex, z: complex, epsrel: float = 1e-13) -> EvalResult:
    """Li_s(z) = z/Gamma(s) int_0^inf t^(s-1)/(e^t - z) dt, off [1, inf)."""
    s, z = complex(s), complex(z)
    _check_jonq(s, z)
    if z == 0:
        return EvalResult(0j, 0.0)
    # a steeper ray than the batch default cancels less for large |Im s|
    ideal = max(-1.5, min(1.5, cmath.phase(s - 1))) if s.real > 1 else 0.0
    alpha = _nudge(cmath.log(z), ideal, ideal)
    v, sc = _jonquiere_batch([s], np.array([z]), alpha, epsrel)
    return EvalResult(complex(v[0, 0]), float(sc[0, 0]))


# --- zero hunting ---------------------------------------------------------


def _cot(a: complex) -> complex:
    # cot a = i (1 + q)/(1 - q) with q = exp(-2ia) or the mirrored form,
    # whichever keeps |q| <= 1
    if a.imag >= 0:
        q = cmath.exp(2j * a)
        return 1j * (q + 1) / (q - 1)
    q = cmath.exp(-2j * a)
    return 1j * (1 + q) / (1 - q)


def spiral_w(s: complex, j: int) -> complex:
    """Seed in the w variable: -cot(pi (2j + 1)/(2(1 - s)))."""
    s = complex(s)
    if s == 1:
        raise DomainError("spiral seed undefined at s = 1")
    a = math.pi * (2 * j + 1) / (2 * (1 - s))
    if a.imag == 0 and math.sin(a.real) == 0:
        raise DomainError("cot pole")
    return -_cot(a)


def spiral_zero_approx(s: complex, j: int) -> complex:
    """-exp(-pi cot(pi (2j + 1)/(2(1 - s))))."""
    if j < 0:
        raise DomainError("spiral_zero_approx requires j >= 0")
    w = spiral_w(s, j)
    if math.pi * w.real > 709.0:
        raise DomainError(f"seed j={j} overflows binary64")
    return -cmath.exp(math.pi * w)


@dataclass
class PolylogZeroSet:
    s: complex
    zeros: list[complex]
    method: str
    approx_indices: list[int | None]
    seeds: list[complex | None] = field(default_factory=list)
    flagged: list[int] = field(default_factory=list)

    def rows(self):
        for j, seed, z in zip(self.approx_indices, self.seeds, self.zeros):
            yield j, seed, z, (abs(z - seed) if seed is not None else None)


def _newton_w(s: complex, w: complex, max_iter: int = 80) -> complex | None:
    """Newton on F(w) e^(-pi w), which has the zeros of Li_s(z)/z."""
    prev = math.inf
    for _ in range(max_iter):
        if not (abs(w.real) < 200 and cmath.isfinite(w)):
            return None
        K = _lip_K(s, w, None)
        F, dF, _, _, _ = _lip_sum(s, w, K)
        den = dF - math.pi * F
        if den == 0:
            return None
        step = F / den
        if abs(step) > 1.0:
            step /= abs(step)
        w = reduce_w(w - step)
        scale = max(1.0, abs(w))
        if abs(step) <= 4 * EPS * scale:
            return w
        # stalled at the rounding floor of F
        if abs(step) <= 1e-12 * scale and abs(step) >= 0.5 * prev:
            return w
        prev = abs(step)
    return None


def zero_free_radius(s: complex) -> float:
    """r with Li_s(z)/z != 0 on |z| <= r, from sum_{n>=2} n^(-Re s) r^(n-1) < 1."""
    n = np.arange(2, 4000)
    lc = -complex(s).real * np.log(n)

    def tail(r):
        return float(np.sum(np.exp(lc + (n - 1) * math.log(r))))

    lo, hi = 0.0, 0.5
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if mid == 0 or tail(mid) < 1:
            lo = mid
        else:
            hi = mid
    return lo


def _series_to_origin(s: complex, z: complex, max_iter: int = 60) -> bool:
    """Undeflated Newton on the power series; True if it collapses onto z = 0."""
    if abs(z) >= 0.25:
        return False
    n = np.arange(1, 200)
    c = np.exp(-s * np.log(n))
    for _ in range(max_iter):
        p = z ** n
        f = complex(np.sum(c * p))
        df = complex(np.sum(c * n * p / z)) if z != 0 else 1.0
        if df == 0:
            return False
        z = z - f / df
        if abs(z) < 1e-280:
            return True
        if abs(z) >= 0.25:
            return False
    return abs(z) < 1e-200


def _dedupe(cands: list[tuple[int | None, complex | None, complex]], rel: float = 1e-11):
    kept: list[tuple[int | None, complex | None, complex]] = []
    dropped: list[int] = []
    for j, seed, z in cands:
        clash = None
        for i, (_, _, z2) in enumerate(kept):
            if abs(z - z2) <= rel * max(abs(z), abs(z2)) or (z == 0 and z2 == 0):
                clash = i
                break
        if clash is None:
            kept.append((j, seed, z))
            continue
        j2, seed2, z2 = kept[clash]
        d_new = abs(z - seed) if seed is not None else math.inf
        d_old = abs(z2 - seed2) if seed2 is not None else math.inf
        if d_new < d_old:
            kept[clash] = (j, seed, z)
            if j2 is not None:
                dropped.append(j2)
        elif j is not None:
            dropped.append(j)
    return kept, dropped


def _lipschitz_zeros(s: complex, jmax: int) -> PolylogZeroSet:
    cands = []
    flagged = []
    r0 = zero_free_radius(s)
    for j in range(jmax + 1):
        try:
            w0 = reduce_w(spiral_w(s, j))
        except DomainError:
            flagged.append(j)
            continue
        seed = -cmath.exp(math.pi * w0) if math.pi * w0.real < 709 else None
        # a seed deep inside the zero-free disc can only stand for z = 0
        if seed is not None and abs(seed) < 0.1 * r0 and _series_to_origin(s, seed):
            cands.append((j, seed, 0j))
            continue
        w = _newton_w(s, w0)
        if w is not None and math.pi * w.real < 709:
            cands.append((j, seed, -cmath.exp(math.pi * w)))
        elif seed is not None and _series_to_origin(s, seed):
            cands.append((j, seed, 0j))
        else:
            flagged.append(j)
    kept, dropped = _dedupe(cands)
    return PolylogZeroSet(
        s=s,
        zeros=[z for _, _, z in kept],
        method="lipschitz-newton",
        approx_indices=[j for j, _, _ in kept],
        seeds=[sd for _, sd, _ in kept],
        flagged=sorted(flagged + dropped),
    )


def _newton_z_batch(s: complex, z0: np.ndarray, max_iter: int = 40, tol: float = 1e-13):
    """Newton on Li_s(z)/z using z d/dz Li_s = Li_{s-1}, all seeds at once.

    Iterates with the fixed quadrature rule, then confirms each converged
    point with one step under adaptive error control.
    """
    z = np.array(z0, dtype=complex)
    alive = np.isfinite(z) & (np.abs(z) > 0)
    done = np.zeros(z.size, dtype=bool)
    alpha = _ray_angle(s)

    def step_at(za, adaptive):
        za = za.copy()
        on_cut = (za.imag == 0) & (za.real >= 1)
        za[on_cut] += 1e-12j
        if adaptive:
            vals, _ = _jonquiere_batch([s, s - 1], za, alpha)
            f, g = vals[0], vals[1]
        else:
            f = _jonquiere_fixed(s, za, alpha)
            g = _jonquiere_fixed(s - 1, za, alpha)
        with np.errstate(all="ignore"):
            return za, za * f / (g - f)

    for _ in range(max_iter):
        act = np.where(alive & ~done)[0]
        if act.size == 0:
            break
        za, step = step_at(z[act], adaptive=False)
        bad = ~np.isfinite(step)
        big = np.abs(step) > 0.5 * np.abs(za)
        step[big] *= 0.5 * np.abs(za[big]) / np.abs(step[big])
        step[bad] = 0
        znew = za - step
        z[act] = znew
        alive[act[bad]] = False
        done[act[(np.abs(step) <= tol * np.abs(znew)) & ~bad & ~big]] = True
        alive[act[(np.abs(znew) > 1e8) | (np.abs(znew) < 1e-8)]] = False
    ok = np.where(done & alive)[0]
    if ok.size:
        za, step = step_at(z[ok], adaptive=True)
        good = np.isfinite(step) & (np.abs(step) <= 1e3 * tol * np.abs(za))
        z[ok[good]] = za[good] - step[good]
        done[ok[~good]] = False
    return z, done & alive


def phase_scan_seeds(
    s: complex,
    lam_range: tuple[float, float] = (0.02, 5.0),
    n_rad: int = 200,
    n_ang: int = 240,
) -> list[complex]:
    """Cell-wise argument principle on a polar grid in lambda = log z.

    The phase of Li_s changes at a nearly uniform rate in log|lambda| both
    near z = 1 and far out.  The angle of lambda runs over (0, 2 pi) so the
    cut z > 1 (lambda > 0) sits on the grid edge; |lambda| < 2 pi keeps the
    other preimages of the cut away.
    """
    s = complex(s)
    lr = np.linspace(math.log(lam_range[0]), math.log(lam_range[1]), n_rad)
    ph = np.linspace(1e-3, TWO_PI - 1e-3, n_ang)
    R, P = np.meshgrid(lr, ph, indexing="ij")
    Z = np.exp(np.exp(R + 1j * P))
    V = _jonquiere_fixed(s, Z.ravel(), _ray_angle(s)).reshape(Z.shape)
    d = lambda a, b: np.angle(b / a)
    wind = d(V[:-1, :-1], V[1:, :-1]) + d(V[1:, :-1], V[1:, 1:]) + d(V[1:, 1:], V[:-1, 1:]) + d(V[:-1, 1:], V[:-1, :-1])
    idx = np.argwhere(np.rint(wind / TWO_PI) >= 1)
    seeds = []
    for i, k in idx:
        lam = cmath.exp(0.5 * (lr[i] + lr[i + 1]) + 0.5j * (ph[k] + ph[k + 1]))
        seeds.append(cmath.exp(lam))
    return seeds


def _jonquiere_zeros(s: complex, jmax: int, scan: bool = True) -> PolylogZeroSet:
    seeds: list[tuple[int | None, complex]] = []
    flagged = []
    for j in range(jmax + 1):
        try:
            seeds.append((j, spiral_zero_approx(s, j)))
        except DomainError:
            flagged.append(j)
    if scan:
        seeds += [(None, z) for z in phase_scan_seeds(s)]
    z0 = np.array([z for _, z in seeds], dtype=complex)
    zs, ok = _newton_z_batch(s, z0)
    cands = []
    for (j, seed), z, good in zip(seeds, zs, ok):
        if good:
            cands.append((j, seed if j is not None else None, complex(z)))
        elif j is not None:
            flagged.append(j)
    kept, dropped = _dedupe(cands, rel=1e-9)
    kept.insert(0, (None, None, 0j))  # Li_s(0) = 0 for every s
    kept.sort(key=lambda t: (t[0] is None, t[0] if t[0] is not None else 0, abs(t[2]), cmath.phase(t[2])))
    return PolylogZeroSet(
        s=s,
        zeros=[z for _, _, z in kept],
        method="jonquiere-newton",
        approx_indices=[j for j, _, _ in kept],
        seeds=[sd for _, sd, _ in kept],
        flagged=sorted(set(flagged + dropped)),
    )


def find_polylog_zeros(s: complex, jmax: int = 20, scan: bool = True) -> PolylogZeroSet:
    """Newton from the spiral seeds j = 0..jmax (plus a phase scan when Re(s) > 1)."""
    s = complex(s)
    if s.real < 0:
        return _lipschitz_zeros(s, jmax)
    if s.real > 1:
        return _jonquiere_zeros(s, jmax, scan)
    raise DomainError("find_polylog_zeros: 0 <= Re(s) <= 1 is not supported")
