"""Angles, lines and the intersection operator I_{u,v}(p, q).

An angle of the cyclic group U_n is a residue k mod n standing for the class
of exp(i*pi*k/n) modulo sign.  All exact values live in Q(zeta_2n).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CycNum, is_real


@dataclass(frozen=True, order=True)
class Angle:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"angle group order must be positive, got {self.n}")
        if not 0 <= self.k < self.n:
            object.__setattr__(self, "k", self.k % self.n)

    @property
    def conductor(self) -> int:
        return 2 * self.n

    def representative(self) -> CycNum:
        """zeta_2n^k, the representative on the unit circle."""
        return CycNum.zeta(2 * self.n, self.k)

    def __mul__(self, other: "Angle") -> "Angle":
        if self.n != other.n:
            raise ValueError("angles from different groups")
        return Angle(self.n, self.k + other.k)

    def to_complex(self) -> complex:
        return cmath.exp(1j * cmath.pi * self.k / self.n)


def angles(n: int) -> list[Angle]:
    return [Angle(n, k) for k in range(n)]


@dataclass(frozen=True)
class Line:
    """L_u(p) = {p + r*u : r real}."""

    anchor: CycNum
    direction: Angle

    def contains(self, q: CycNum) -> bool:
        return pairing(q - self.anchor, self.direction.representative()).is_zero()


@dataclass(frozen=True)
class LinearMapPair:
    """Real-linear maps A(p) = a1*p + b1*conj(p) and B(q) = a2*q + b2*conj(q)."""

    a1: CycNum
    b1: CycNum
    a2: CycNum
    b2: CycNum

    def A(self, p: CycNum) -> CycNum:
        return self.a1 * p + self.b1 * p.conj()

    def B(self, q: CycNum) -> CycNum:
        return self.a2 * q + self.b2 * q.conj()

    def __call__(self, p: CycNum, q: CycNum) -> CycNum:
        return self.A(p) + self.B(q)


class ParallelLinesError(ValueError):
    """Raised when the two angles of an intersection coincide."""


def pairing(x: CycNum, y: CycNum) -> CycNum:
    """<x, y> = x*conj(y) - conj(x)*y; purely imaginary and antisymmetric."""
    w = x * y.conj()
    return w - w.conj()


def _check_pair(u: Angle, v: Angle) -> None:
    if u.n != v.n:
        raise ValueError(f"angles from U_{u.n} and U_{v.n}")
    if u.k == v.k:
        raise ParallelLinesError(f"equal angle classes k={u.k}: lines are parallel")


@lru_cache(maxsize=None)
def direction_coefficient(u: Angle, v: Angle) -> CycNum:
    """v / <u, v>, the factor multiplying <u, p> in the intersection formula."""
    _check_pair(u, v)
    ur, vr = u.representative(), v.representative()
    return vr / pairing(ur, vr)


def line_key(u: Angle, p: CycNum) -> CycNum:
    """<u, p>; constant along L_u(p), so it identifies the line."""
    return pairing(u.representative(), p)


def intersect(u: Angle, v: Angle, p: CycNum, q: CycNum) -> CycNum:
    """The unique point of L_u(p) and L_v(q).

    Evaluated as <u,p>/<u,v> * v + <v,q>/<v,u> * u.
    """
    _check_pair(u, v)
    if p.N != 2 * u.n or q.N != 2 * u.n:
        raise ValueError(f"points must have conductor {2 * u.n}")
    return line_key(u, p) * direction_coefficient(u, v) + line_key(v, q) * direction_coefficient(v, u)


def intersect_float(u: complex, v: complex, p: complex, q: complex, *, tol: float = 1e-12) -> complex:
    """Floating-point intersection of the line through p along u with the line through q along v."""
    u = u / abs(u)
    v = v / abs(v)
    s = (u * v.conjugate()).imag
    if abs(s) < tol:
        raise ParallelLinesError(f"near-parallel directions, |sin| = {abs(s):.3g}")

    def pair(x: complex, y: complex) -> complex:
        w = x * y.conjugate()
        return w - w.conjugate()

    return pair(u, p) / pair(u, v) * v + pair(v, q) / pair(v, u) * u


def project(u: Angle, v: Angle, p: CycNum) -> CycNum:
    """Projection of p onto the line through 0 along v, in the direction u."""
    return intersect(u, v, p, CycNum.zero(p.N))


def convexity_maps(u: Angle, v: Angle) -> LinearMapPair:
    _check_pair(u, v)
    ur, vr = u.representative(), v.representative()
    cu = direction_coefficient(u, v)
    cv = direction_coefficient(v, u)
    # <u,p> = u*conj(p) - conj(u)*p, and likewise for <v,q>
    return LinearMapPair(a1=-ur.conj() * cu, b1=ur * cu, a2=-vr.conj() * cv, b2=vr * cv)


def is_rank_one(a: CycNum, b: CycNum) -> bool:
    """Whether p -> a*p + b*conj(p) is singular as a real 2x2 matrix (|a| = |b|)."""
    return (a * a.conj() - b * b.conj()).is_zero()


def on_line_through_origin(z: CycNum, v: Angle) -> bool:
    return is_real(z / v.representative())
