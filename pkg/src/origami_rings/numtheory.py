"""Cyclotomic identities behind the structure of R(U_n).

Elementary monomials I_{u,v}(1, 0) = (1 - u^2) / (1 - (u/v)^2), quotients
(1 - zeta^a) / (1 - zeta^b), the product identity n = prod (1 - zeta^k),
certificates writing 1/p as a ring element times such quotients, ring
membership verdicts and decomposition into integer combinations of
monomials.

Throughout, ``n`` is the order of the angle group and every value lives in
Q(zeta_2n), with zeta_n represented as zeta_2n^2.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import mpmath
from sympy import factorint, isprime, primefactors

from .cyclotomic import (CycNum, euler_phi, from_subfield_coords, integrality_profile,
                         is_real, subfield_coords)
from .geometry import Angle, pairing


class IdentityError(ArithmeticError):
    """An identity that must hold exactly failed to."""


def zeta_n(n: int, k: int = 1) -> CycNum:
    """zeta_n^k inside Q(zeta_2n)."""
    return CycNum.zeta(2 * n, 2 * k)


# ---------------------------------------------------------------------------
# elementary monomials and quotients

@lru_cache(maxsize=None)
def elementary_monomial(u: Angle, v: Angle) -> CycNum:
    """I_{u,v}(1, 0) via the closed form (1 - u^2) / (1 - (u/v)^2)."""
    if u.n != v.n:
        raise ValueError("angles from different groups")
    if u.k == v.k:
        raise ValueError(f"elementary monomial needs distinct angles, got k={u.k} twice")
    n = u.n
    one = CycNum.one(2 * n)
    return (one - zeta_n(n, u.k)) / (one - zeta_n(n, u.k - v.k))


def angles_for_quotient(a: int, b: int, n: int) -> tuple[Angle, Angle]:
    """Angles (u, v) with u^2 = zeta_n^a and (u/v)^2 = zeta_n^b."""
    if b % n == 0:
        raise ValueError("b must be nonzero modulo n")
    return Angle(n, a), Angle(n, a - b)


def quotient_1mz(a: int, b: int, n: int) -> CycNum:
    """(1 - zeta_n^a) / (1 - zeta_n^b) for a, b nonzero mod n."""
    if a % n == 0 or b % n == 0:
        raise ValueError(f"exponents must be nonzero mod {n}: a={a}, b={b}")
    one = CycNum.one(2 * n)
    return (one - zeta_n(n, a)) / (one - zeta_n(n, b))


def check_eqn2(n: int) -> CycNum:
    """Verify prod_{k=1}^{n-1} (1 - zeta_n^k) = n exactly; return the product."""
    if n < 2:
        raise ValueError("need n >= 2")
    one = CycNum.one(2 * n)
    prod = one
    for k in range(1, n):
        prod = prod * (one - zeta_n(n, k))
    if prod != n:
        raise IdentityError(f"product over 1 - zeta^k is {prod}, expected {n}")
    return prod


def _two_distinct_primes(n: int) -> tuple[int, int]:
    f = factorint(n)
    if len(f) != 2 or any(e != 1 for e in f.values()):
        raise ValueError(f"{n} is not a product of two distinct primes")
    p, q = sorted(f)
    return p, q


def coprime_unit_product(n: int) -> CycNum:
    """For n = p*q, check prod over k coprime to n of (1 - zeta_n^k) equals 1.

    Also certifies that 1 - zeta_n is a unit by checking its exact inverse has
    integral coordinates.
    """
    _two_distinct_primes(n)
    one = CycNum.one(2 * n)
    prod = one
    for k in range(1, n):
        if math.gcd(k, n) == 1:
            prod = prod * (one - zeta_n(n, k))
    if prod != 1:
        raise IdentityError(f"coprime product is {prod}, expected 1")
    unit_inverse(one - zeta_n(n))
    return prod


def unit_inverse(x: CycNum) -> CycNum:
    """Exact inverse of ``x``, checked to lie in Z[zeta_n] (n = conductor / 2)."""
    inv = x.inverse()
    coords = subfield_coords(inv, x.N // 2)
    if coords is None or integrality_profile(coords):
        raise IdentityError(f"{x} is not a unit of Z[zeta_{x.N // 2}]")
    return inv


@dataclass(frozen=True)
class PrimeInverseCertificate:
    """1/p written as ``multiplier`` times a product of quotients.

    ``pairs`` holds exponents (a, b) mod n, each standing for
    (1 - zeta_n^a) / (1 - zeta_n^b); ``multiplier`` lies in Z[zeta_n].
    ``d`` is the divisor of n (p*q or p^2) the construction works in.
    """

    n: int
    p: int
    d: int
    pairs: tuple[tuple[int, int], ...]
    multiplier: CycNum

    def value(self) -> CycNum:
        out = self.multiplier
        for a, b in self.pairs:
            out = out * quotient_1mz(a, b, self.n)
        return out

    def factors(self) -> list[tuple[int, int]]:
        """The quotients as elementary-monomial angle residues (u.k, v.k)."""
        out = []
        for a, b in self.pairs:
            u, v = angles_for_quotient(a, b, self.n)
            out.append((u.k, v.k))
        return out


def _reduction_divisor(n: int, p: int) -> int:
    if n % (p * p) == 0:
        return p * p
    others = [q for q in primefactors(n) if q != p]
    if not others:
        raise ValueError(f"{n} is prime; 1/{p} is not needed")
    return p * others[0]


def inverse_prime_product(n: int, p: int) -> PrimeInverseCertificate:
    """Certificate that 1/p is in R(U_n) for a prime p dividing composite n."""
    if not isprime(p) or n % p:
        raise ValueError(f"{p} is not a prime divisor of {n}")
    if isprime(n):
        raise ValueError(f"n={n} is prime")
    d = _reduction_divisor(n, p)
    lift = n // d  # zeta_d = zeta_n^(n/d)
    N = 2 * n
    if d == p * p:
        # prod over k < p^2 coprime to p of (1 - zeta^k)/(1 - zeta^(pk)) = 1/p^(p-1)
        pairs = [(k, p * k) for k in range(1, d) if k % p]
        multiplier = CycNum.rational(N, p ** (p - 2))
    else:
        # prod_{k=1}^{p-1} (1 - zeta)/(1 - zeta^(qk)) = (1 - zeta)^(p-1) / p
        q = d // p
        pairs = [(1, q * k) for k in range(1, p)]
        unit = (CycNum.one(N) - zeta_n(n, lift)) ** (p - 1)
        multiplier = unit_inverse(unit)
    lifted = tuple(((a * lift) % n, (b * lift) % n) for a, b in pairs)
    cert = PrimeInverseCertificate(n=n, p=p, d=d, pairs=lifted, multiplier=multiplier)
    if cert.value() != Fraction(1, p):
        raise IdentityError(f"certificate for 1/{p} in n={n} evaluates to {cert.value()}")
    return cert


# ---------------------------------------------------------------------------
# ring membership

class Verdict(enum.Enum):
    INTEGRAL = "in Z[ζ_{n}]"
    LOCALIZED = "in Z[1/{n}, ζ_{n}] only"
    FIELD = "in Q(ζ_{n}) only"
    OUTSIDE = "outside Q(ζ_{n})"

    def describe(self, n: int) -> str:
        return self.value.format(n=n)


def ring_membership(x: CycNum, n: int) -> Verdict:
    if x.N != 2 * n:
        raise ValueError(f"expected conductor {2 * n}, got {x.N}")
    coords = subfield_coords(x, n)
    if coords is None:
        return Verdict.OUTSIDE
    profile = integrality_profile(coords)
    if not profile:
        return Verdict.INTEGRAL
    if profile <= set(primefactors(n)):
        return Verdict.LOCALIZED
    return Verdict.FIELD


def in_origami_ring(x: CycNum, n: int) -> bool:
    """Membership in R(U_n): Z[zeta_n] for prime n, Z[1/n, zeta_n] otherwise."""
    verdict = ring_membership(x, n)
    return verdict is Verdict.INTEGRAL or (verdict is Verdict.LOCALIZED and not isprime(n))


# ---------------------------------------------------------------------------
# monomial expressions

Factor = tuple[int, int]


@dataclass(frozen=True)
class MonomialExpr:
    """Sum of integer multiples of products of elementary monomials.

    Each factor (uk, vk) denotes I_{u,v}(1, 0) with u = Angle(n, uk),
    v = Angle(n, vk).
    """

    n: int
    terms: tuple[tuple[int, tuple[Factor, ...]], ...]

    def __post_init__(self):
        for coeff, factors in self.terms:
            for uk, vk in factors:
                if uk % self.n == vk % self.n:
                    raise ValueError(f"factor ({uk}, {vk}) has equal angles")

    def evaluate(self) -> CycNum:
        N = 2 * self.n
        total = CycNum.zero(N)
        for coeff, factors in self.terms:
            total = total + monomial_value(factors, self.n) * coeff
        return total

    def to_json(self) -> str:
        return json.dumps([
            {"coeff": c, "factors": [{"u": u, "v": v} for u, v in fs]}
            for c, fs in self.terms])

    @classmethod
    def from_json(cls, text: str, n: int) -> "MonomialExpr":
        data = json.loads(text)
        terms = tuple(
            (int(t["coeff"]), tuple((int(f["u"]), int(f["v"])) for f in t["factors"]))
            for t in data)
        return cls(n=n, terms=terms)


def monomial_value(factors: Sequence[Factor], n: int) -> CycNum:
    out = CycNum.one(2 * n)
    for uk, vk in factors:
        out = out * elementary_monomial(Angle(n, uk), Angle(n, vk))
    return out


def decompose(x: CycNum, n: int) -> MonomialExpr:
    """Write an element of R(U_n) as an integer combination of monomials.

    zeta_n^j is (-1)^j times the j-th power of the monomial
    (1 - zeta)/(1 - zeta^-1) = -zeta, and a denominator D is cleared with
    1/D = M * Q, where M is in Z[zeta_n] and Q is a product of 1/p certificate
    quotients.  Then x = (x*D*M) * Q with x*D*M integral.
    """
    if not in_origami_ring(x, n):
        raise ValueError(f"{x} is {ring_membership(x, n).describe(n)}; not in R(U_{n})")
    N = 2 * n
    coords = subfield_coords(x, n)
    D = math.lcm(1, *(c.denominator for c in coords))
    M = CycNum.one(N)
    q_factors: list[Factor] = []
    for p, e in sorted(factorint(D).items()):
        cert = inverse_prime_product(n, p)
        M = M * cert.multiplier ** e
        q_factors.extend(cert.factors() * e)
    y = subfield_coords(x * D * M, n)
    if integrality_profile(y):
        raise IdentityError("cleared numerator is not integral")
    neg_zeta = tuple(a.k for a in angles_for_quotient(1, -1, n))
    terms = []
    for j, c in enumerate(y):
        if c:
            coeff = int(c) * (-1) ** j
            terms.append((coeff, tuple([neg_zeta] * j + q_factors)))
    expr = MonomialExpr(n=n, terms=tuple(terms))
    if expr.evaluate() != x:
        raise IdentityError(f"decomposition of {x} does not evaluate back")
    return expr


def random_ring_element(n: int, rng, height: int = 5, max_den_exp: int = 2) -> CycNum:
    """Random element of R(U_n), with denominators n^e for composite n."""
    N = 2 * n
    coords = [rng.randint(-height, height) for _ in range(euler_phi(n))]
    x = from_subfield_coords(N, n, coords)
    if not isprime(n):
        x = x / (n ** rng.randint(0, max_den_exp))
    return x


# ---------------------------------------------------------------------------
# sine-quotients

@dataclass(frozen=True)
class SineQuotient:
    """sin(pi(a - c)) / sin(pi(a - b)); angles in units of pi."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if (self.a - self.b).denominator == 1:
            raise ValueError("vanishing denominator: a and b agree modulo 1")


def sine_quotient_value(sq: SineQuotient, precision: int = 53) -> float:
    with mpmath.workprec(precision):
        num = mpmath.sinpi(mpmath.mpf(sq.a.numerator) / sq.a.denominator
                           - mpmath.mpf(sq.c.numerator) / sq.c.denominator)
        den = mpmath.sinpi(mpmath.mpf(sq.a.numerator) / sq.a.denominator
                           - mpmath.mpf(sq.b.numerator) / sq.b.denominator)
        value = num / den
    return float(value) if precision <= 53 else value


def sine_quotient_exact(sq: SineQuotient, n: int) -> CycNum:
    """<u, w> / <u, v> with u = e^{i pi a}, v = e^{i pi b}, w = e^{i pi c} in Q(zeta_2n)."""
    N = 2 * n

    def root(t: Fraction) -> CycNum:
        k = t * n
        if k.denominator != 1:
            raise ValueError(f"{t} is not a multiple of 1/{n}")
        return CycNum.zeta(N, int(k))

    u, v, w = root(sq.a), root(sq.b), root(sq.c)
    value = pairing(u, w) / pairing(u, v)
    if not is_real(value):
        raise IdentityError("pairing quotient is not real")
    return value


def monomial_sine_form(factors: Sequence[Factor], n: int) -> tuple[float, Angle]:
    """Split a product of elementary monomials into (real scale, angle).

    Each factor I_{u,v}(1,0) is <u,1>/<u,v> * v, a sine-quotient times v.
    """
    scale = 1.0
    phase = Angle(n, 0)
    for uk, vk in factors:
        sq = SineQuotient(Fraction(uk, n), Fraction(vk, n), Fraction(0))
        scale *= sine_quotient_value(sq)
        phase = phase * Angle(n, vk)
    # Angle multiplication drops a sign each time the residue wraps past n.
    wraps = sum(vk for _, vk in factors) // n
    return scale * (-1) ** wraps, phase


def monomial_sine_form_complex(factors: Sequence[Factor], n: int) -> complex:
    scale, phase = monomial_sine_form(factors, n)
    return scale * phase.to_complex()
