import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import strategies as st

from origami_rings.cyclotomic import CycNum, field

X = sympy.Symbol("X")

ACCEPTANCE_LINES: list[str] = []


def sym_reduce(expr, N):
    """Coefficients of expr (a sympy rational function in X) reduced mod Phi_N.

    Independent of the package: uses sympy's own cyclotomic polynomial and
    polynomial inversion.
    """
    phi = sympy.Poly(sympy.cyclotomic_poly(N, X), X, domain="QQ")
    num, den = sympy.fraction(sympy.together(expr))
    num = sympy.Poly(num, X, domain="QQ").rem(phi)
    den = sympy.Poly(den, X, domain="QQ").rem(phi)
    inv = sympy.invert(den, phi)
    res = (num * inv).rem(phi)
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(res.all_coeffs())]
    coeffs += [Fraction(0)] * (phi.degree() - len(coeffs))
    return tuple(coeffs)


def random_cyc(rng: random.Random, N: int, height: int = 4, dens=(1, 1, 2, 3)) -> CycNum:
    phi = field(N).phi
    return CycNum.from_coeffs(N, [Fraction(rng.randint(-height, height), rng.choice(dens)) for _ in range(phi)])


def cyc_strategy(N: int, height: int = 6):
    phi = field(N).phi
    coeff = st.fractions(min_value=-height, max_value=height, max_denominator=7)
    return st.lists(coeff, min_size=phi, max_size=phi).map(lambda cs: CycNum.from_coeffs(N, cs))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


LINEARITY_SCALARS = (Fraction(-2), Fraction(-1, 2), Fraction(1, 3), Fraction(2))


def prop21_failures(n: int, rng: random.Random, samples: int) -> list[str]:
    """Run the intersection-operator property suite; return names of failures.

    Each sample draws random exact points p, q, a translation t, a rotation
    w in U_n and a distinct angle pair (u, v).
    """
    from origami_rings.geometry import (Angle, convexity_maps, intersect, is_rank_one,
                                        on_line_through_origin, pairing, project)
    N = 2 * n
    zero = CycNum.zero(N)
    failures = []
    for _ in range(samples):
        uk, vk = rng.sample(range(n), 2)
        u, v = Angle(n, uk), Angle(n, vk)
        p, q, t = random_cyc(rng, N), random_cyc(rng, N), random_cyc(rng, N)
        r = rng.choice(LINEARITY_SCALARS)
        w = Angle(n, rng.randrange(n))
        wr = w.representative()
        z = intersect(u, v, p, q)
        checks = {
            "symmetry": z == intersect(v, u, q, p),
            "reduction": z == intersect(u, v, p, zero) + intersect(v, u, q, zero),
            "projection": (on_line_through_origin(project(u, v, p), v)
                           and pairing(project(u, v, p) - p, u.representative()).is_zero()),
            "linearity": (intersect(u, v, p + q, zero) == intersect(u, v, p, zero) + intersect(u, v, q, zero)
                          and intersect(u, v, p * r, zero) == intersect(u, v, p, zero) * r),
            "convexity": False,
            "rotation": wr * z == intersect(w * u, w * v, wr * p, wr * q),
            "translation": intersect(u, v, p + t, q + t) == z + t,
        }
        maps = convexity_maps(u, v)
        checks["convexity"] = (
            maps(p, q) == z and maps.a1 + maps.a2 == 1 and (maps.b1 + maps.b2).is_zero()
            and is_rank_one(maps.a1, maps.b1) and is_rank_one(maps.a2, maps.b2))
        failures.extend(name for name, ok in checks.items() if not ok)
    return failures
