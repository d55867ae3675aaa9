"""Branches phi_{A,B} of the dilogarithm and their monodromy bookkeeping."""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import DomainError
from .special_fn import EvalResult, _li2, log_principal

FOUR_PI2 = 4 * math.pi ** 2
TWO_PI = 2 * math.pi


class BranchIndex(NamedTuple):
    A: int
    B: int

    def __str__(self) -> str:
        return f"({self.A},{self.B})"


class MonodromyElement(NamedTuple):
    """Upper unipotent 3x3 integer matrix [[1, x, z], [0, 1, y], [0, 0, 1]]."""

    x: int
    y: int
    z: int

    def matrix(self) -> list[list[int]]:
        return [[1, self.x, self.z], [0, 1, self.y], [0, 0, 1]]

    def inverse(self) -> "MonodromyElement":
        return MonodromyElement(-self.x, -self.y, self.x * self.y - self.z)


IDENTITY = MonodromyElement(0, 0, 0)


def as_branch(b) -> BranchIndex:
    return b if isinstance(b, BranchIndex) else BranchIndex(int(b[0]), int(b[1]))


def phi_eval(b, z: complex) -> EvalResult:
    A, B = as_branch(b)
    z = complex(z)
    v, err = _li2(z)
    v = v + FOUR_PI2 * A
    err += 4 * 2.0 ** -52 * FOUR_PI2 * abs(A)
    if B != 0:
        if z == 0:
            raise DomainError("phi: z = 0 is a branch point when B != 0")
        t = 1j * TWO_PI * B * log_principal(z)
        v = v + t
        err += 4 * 2.0 ** -52 * abs(t)
    return EvalResult(v, err)


def phi(b, z: complex) -> complex:
    """phi_{A,B}(z) = Li2(z) + 4 pi^2 A + 2 pi i B log z."""
    return phi_eval(b, z).value


def phi_derivative(b, z: complex) -> complex:
    """(-log(1-z) + 2 pi i B)/z, off the cut [1, inf).

    The jump of log z across (-inf, 0) does not reach the derivative.
    """
    A, B = as_branch(b)
    z = complex(z)
    if z == 0:
        raise DomainError("phi_derivative: z = 0")
    if z.imag == 0.0 and z.real >= 1:
        raise DomainError(f"phi_derivative: z = {z} lies on a branch cut")
    return (-log_principal(1 - z) + 1j * TWO_PI * B) / z


def monodromy_rotate_zero(b, positive: bool = True) -> BranchIndex:
    A, B = as_branch(b)
    return BranchIndex(A + B, B) if positive else BranchIndex(A - B, B)


def monodromy_rotate_one(b, positive: bool = False) -> BranchIndex:
    A, B = as_branch(b)
    return BranchIndex(A, B - 1) if positive else BranchIndex(A, B + 1)


def heisenberg_compose(g: MonodromyElement, h: MonodromyElement) -> MonodromyElement:
    return MonodromyElement(g.x + h.x, g.y + h.y, g.z + h.z + g.x * h.y)


# matrices acting on the column (A, B, 1): loop about 0, loop about 1
G_ZERO = MonodromyElement(1, 0, 0)
G_ONE = MonodromyElement(0, 1, 0)


def act(g: MonodromyElement, b) -> BranchIndex:
    A, B = as_branch(b)
    return BranchIndex(A + g.x * B + g.z, B + g.y)
