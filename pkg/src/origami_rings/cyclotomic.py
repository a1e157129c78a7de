"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Polynomials over Q are plain tuples of :class:`fractions.Fraction`, index j
holding the coefficient of X**j, with trailing zeros stripped (the empty
tuple is the zero polynomial).

Field elements (:class:`CycNum`) are stored on the power basis
1, zeta_N, ..., zeta_N**(phi(N)-1) as a tuple of integer numerators over one
positive common denominator, kept in lowest terms.  That form is canonical,
so equality and hashing are structural.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

import mpmath
from sympy import primefactors

Rational = Union[int, Fraction]
RationalPoly = tuple  # tuple[Fraction, ...]


# ---------------------------------------------------------------------------
# rational polynomials

def poly_trim(p: Iterable[Rational]) -> RationalPoly:
    """Normalize to a tuple of Fractions without trailing zeros."""
    out = [Fraction(c) for c in p]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def poly_add(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for i, c in enumerate(b):
        res[i] += c
    return poly_trim(res)


def poly_sub(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    return poly_add(a, tuple(-c for c in b))


def poly_mul(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    if not a or not b:
        return ()
    res = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] += x * y
    return poly_trim(res)


def poly_divmod(a: RationalPoly, b: RationalPoly) -> tuple[RationalPoly, RationalPoly]:
    """Euclidean division over Q."""
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(poly_trim(a))
    lead = b[-1]
    db = len(b) - 1
    if len(rem) - 1 < db:
        return (), tuple(rem)
    quo = [Fraction(0)] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] / lead
        quo[i - db] = c
        if c:
            for j, bj in enumerate(b):
                rem[i - db + j] -= c * bj
    return poly_trim(quo), poly_trim(rem[:db])


def poly_xgcd(a: RationalPoly, b: RationalPoly) -> tuple[RationalPoly, RationalPoly, RationalPoly]:
    """Return (g, s, t) with s*a + t*b = g, g monic (or zero)."""
    r0, r1 = poly_trim(a), poly_trim(b)
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1))
    if r0:
        inv = 1 / r0[-1]
        r0 = tuple(c * inv for c in r0)
        s0 = tuple(c * inv for c in s0)
        t0 = tuple(c * inv for c in t0)
    return r0, s0, t0


def divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def euler_phi(m: int) -> int:
    result = m
    for p in primefactors(m):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> RationalPoly:
    """Phi_d, computed as (X^d - 1) divided by Phi_e for every proper divisor e."""
    if d < 1:
        raise ValueError(f"cyclotomic_poly needs d >= 1, got {d}")
    num: RationalPoly = poly_trim([-1] + [0] * (d - 1) + [1])
    for e in divisors(d)[:-1]:
        num, rem = poly_divmod(num, cyclotomic_poly(e))
        assert not rem
    return num


# ---------------------------------------------------------------------------
# field context

class _Field:
    """Precomputed reduction data for Q(zeta_N); immutable once built."""

    __slots__ = ("N", "phi", "modulus", "powers", "conj_rows")

    def __init__(self, N: int):
        self.N = N
        phi_poly = [int(c) for c in cyclotomic_poly(N)]
        self.phi = phi = len(phi_poly) - 1
        self.modulus = tuple(phi_poly)
        # powers[j] = zeta^j reduced, for 0 <= j < max(N, 2*phi - 1)
        top = max(N, 2 * phi - 1)
        powers = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(top):
            powers.append(tuple(cur))
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for i in range(phi):
                    cur[i] -= carry * phi_poly[i]
        self.powers = tuple(powers)
        self.conj_rows = tuple(self.powers[(N - j) % N] for j in range(phi))


@lru_cache(maxsize=None)
def field(N: int) -> _Field:
    if N < 1:
        raise ValueError(f"conductor must be positive, got {N}")
    return _Field(N)


def _normalize(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        nums = [-x for x in nums]
        den = -den
    g = math.gcd(den, *nums)
    if g != 1:
        nums = [x // g for x in nums]
        den //= g
    return tuple(nums), den


class CycNum:
    """An element of Q(zeta_N) in canonical power-basis form."""

    __slots__ = ("N", "num", "den", "_hash")

    def __init__(self, N: int, num: Sequence[int], den: int = 1, *, _canonical: bool = False):
        if not _canonical:
            F = field(N)
            num = [int(x) for x in num]
            if len(num) > F.phi:
                num = _reduce(F, num)
            else:
                num = num + [0] * (F.phi - len(num))
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            num, den = _normalize(num, den)
            if not any(num):
                den = 1
        self.N = N
        self.num = tuple(num)
        self.den = den
        self._hash = None

    # construction helpers ---------------------------------------------------

    @classmethod
    def from_coeffs(cls, N: int, coeffs: Iterable[Rational]) -> "CycNum":
        """Build from rational coefficients on 1, zeta, zeta^2, ... (any length)."""
        fr = [Fraction(c) for c in coeffs]
        den = math.lcm(1, *(c.denominator for c in fr))
        return cls(N, [c.numerator * (den // c.denominator) for c in fr], den)

    @classmethod
    def rational(cls, N: int, r: Rational) -> "CycNum":
        r = Fraction(r)
        return cls(N, [r.numerator], r.denominator)

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> "CycNum":
        F = field(N)
        return cls(N, F.powers[k % N], 1, _canonical=True)

    @classmethod
    def zero(cls, N: int) -> "CycNum":
        return cls(N, [0] * field(N).phi, 1, _canonical=True)

    @classmethod
    def one(cls, N: int) -> "CycNum":
        return cls.zeta(N, 0)

    # views -------------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Full-length coefficient tuple (length phi(N))."""
        return tuple(Fraction(x, self.den) for x in self.num)

    @property
    def poly(self) -> RationalPoly:
        return poly_trim(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    # arithmetic --------------------------------------------------------------

    def _coerce(self, other) -> "CycNum":
        if isinstance(other, CycNum):
            if other.N != self.N:
                raise ValueError(f"conductor mismatch: {self.N} vs {other.N}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.rational(self.N, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        da, db = self.den, other.den
        if da == db:
            nums = [x + y for x, y in zip(self.num, other.num)]
        else:
            nums = [x * db + y * da for x, y in zip(self.num, other.num)]
            da *= db
        num, den = _normalize(nums, da)
        return CycNum(self.N, num, den if any(num) else 1, _canonical=True)

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum(self.N, tuple(-x for x in self.num), self.den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = field(self.N)
        a, b = self.num, other.num
        conv = [0] * (2 * F.phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        nums = _reduce(F, conv)
        num, den = _normalize(nums, self.den * other.den)
        return CycNum(self.N, num, den if any(num) else 1, _canonical=True)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        g, s, _ = poly_xgcd(self.poly, cyclotomic_poly(self.N))
        assert g == (Fraction(1),), "Phi_N is irreducible"
        return CycNum.from_coeffs(self.N, s)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int) -> "CycNum":
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNum.one(self.N)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> "CycNum":
        """Complex conjugate, i.e. the automorphism zeta -> zeta^(N-1)."""
        F = field(self.N)
        acc = [0] * F.phi
        for x, row in zip(self.num, F.conj_rows):
            if x:
                for i, r in enumerate(row):
                    if r:
                        acc[i] += x * r
        return CycNum(self.N, acc, self.den, _canonical=True)

    # comparison --------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, CycNum):
            return self.N == other.N and self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.N, self.num, self.den))
        return self._hash

    def sort_key(self) -> tuple[Fraction, ...]:
        return self.coeffs

    def __lt__(self, other: "CycNum") -> bool:
        return self.sort_key() < other.sort_key()

    # numeric embedding -------------------------------------------------------

    def __complex__(self) -> complex:
        return to_complex(self)

    def __repr__(self) -> str:
        from .literal import format_literal
        return f"CycNum({self.N}, {format_literal(self)!r})"

    def __str__(self) -> str:
        from .literal import format_literal
        return format_literal(self)


def _reduce(F: _Field, conv: Sequence[int]) -> list[int]:
    phi = F.phi
    out = list(conv[:phi]) + [0] * max(0, phi - len(conv))
    for j in range(phi, len(conv)):
        c = conv[j]
        if c:
            row = F.powers[j % F.N]
            for i, r in enumerate(row):
                if r:
                    out[i] += c * r
    return out


# ---------------------------------------------------------------------------
# functional surface

def _check_same(a: CycNum, b: CycNum) -> None:
    if a.N != b.N:
        raise ValueError(f"conductor mismatch: {a.N} vs {b.N}")


def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    _check_same(a, b)
    return a + b


def cyc_sub(a: CycNum, b: CycNum) -> CycNum:
    _check_same(a, b)
    return a - b


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    _check_same(a, b)
    return a * b


def cyc_inv(a: CycNum) -> CycNum:
    return a.inverse()


def cyc_conj(a: CycNum) -> CycNum:
    return a.conj()


def is_real(a: CycNum) -> bool:
    return a.conj() == a


@lru_cache(maxsize=None)
def _subfield_solver(N: int, m: int):
    """Rows and inverse matrix for expressing elements on powers of zeta_N^(N/m)."""
    if N % m:
        raise ValueError(f"{m} does not divide conductor {N}")
    F = field(N)
    step = N // m
    k = euler_phi(m)
    cols = [F.powers[(step * j) % N] for j in range(k)]
    # Gaussian elimination on the transposed system to pick k independent rows.
    M = [[Fraction(cols[j][i]) for j in range(k)] for i in range(F.phi)]
    rows: list[int] = []
    basis: list[list[Fraction]] = []
    for i, row in enumerate(M):
        vec = row[:]
        for piv, b in zip(pivots_of(basis), basis):
            if vec[piv]:
                f = vec[piv] / b[piv]
                vec = [x - f * y for x, y in zip(vec, b)]
        if any(vec):
            basis.append(vec)
            rows.append(i)
        if len(rows) == k:
            break
    square = [M[i] for i in rows]
    inv = _mat_inverse(square)
    return tuple(rows), inv, cols, step


def pivots_of(basis: list[list[Fraction]]) -> list[int]:
    return [next(i for i, x in enumerate(b) if x) for b in basis]


def _mat_inverse(A: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(A)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def subfield_coords(a: CycNum, m: int) -> Optional[tuple[Fraction, ...]]:
    """Coordinates of ``a`` on 1, zeta_m, ..., zeta_m^(phi(m)-1), or None.

    zeta_m is identified with zeta_N^(N/m).  Returns None when ``a`` is not
    in the subfield Q(zeta_m).
    """
    rows, inv, cols, _ = _subfield_solver(a.N, m)
    target = a.coeffs
    rhs = [target[i] for i in rows]
    coords = tuple(sum((inv[r][c] * rhs[c] for c in range(len(rhs))), Fraction(0))
                   for r in range(len(rhs)))
    back = [Fraction(0)] * len(target)
    for c, col in zip(coords, cols):
        if c:
            for i, x in enumerate(col):
                back[i] += c * x
    if tuple(back) != target:
        return None
    return coords


def from_subfield_coords(N: int, m: int, coords: Sequence[Rational]) -> CycNum:
    step = N // m
    total = CycNum.zero(N)
    for j, c in enumerate(coords):
        if c:
            total = total + CycNum.zeta(N, step * j) * Fraction(c)
    return total


def integrality_profile(coords: Iterable[Rational]) -> frozenset[int]:
    """Primes dividing some coordinate denominator; empty means integral."""
    den = math.lcm(1, *(Fraction(c).denominator for c in coords))
    return frozenset(primefactors(den))


def to_complex(a: CycNum, precision: int = 53) -> complex:
    """Embed via zeta_N -> exp(2*pi*i/N).

    With ``precision`` above 53 bits the sum is evaluated in mpmath and an
    ``mpmath.mpc`` is returned.
    """
    if precision < 53:
        raise ValueError("precision must be at least 53 bits")
    if precision == 53:
        N = a.N
        total = 0j
        for j, x in enumerate(a.num):
            if x:
                total += (x / a.den) * cmath.exp(2j * math.pi * j / N)
        return total
    with mpmath.workprec(precision + 16):
        N = a.N
        total = mpmath.mpc(0)
        for j, x in enumerate(a.num):
            if x:
                total += mpmath.mpf(x) / a.den * mpmath.expjpi(mpmath.mpf(2 * j) / N)
    return total
