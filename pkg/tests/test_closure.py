import cmath
import math
from itertools import product

import pytest
from sympy import primefactors

from origami_rings.closure import (BudgetExhausted, contains_point, density_probe, eisenstein,
                                   expand, export_points, float_discrepancy, generate, import_points,
                                   seed, witness_failures)
from origami_rings.cyclotomic import CycNum, integrality_profile, subfield_coords, to_complex
from origami_rings.geometry import Angle, intersect
from origami_rings.numtheory import Verdict, ring_membership

# per-depth new-point counts, cross-checked by the two brute forces below
FROZEN_COUNTS = {
    (3, 4): (2, 2, 4, 12, 40),
    (4, 2): (2, 6, 31),
    (5, 2): (2, 12, 162),
    (6, 2): (2, 20, 507),
}


def float_brute_force(n: int, depth: int) -> tuple[int, ...]:
    """Point-pair closure in complex floats, deduplicated on a 1e-7 grid."""
    dirs = [cmath.exp(1j * math.pi * k / n) for k in range(n)]
    key = lambda z: (round(z.real * 1e7), round(z.imag * 1e7))
    pts = {key(0j): 0j, key(1 + 0j): 1 + 0j}
    counts = [2]
    for _ in range(depth):
        found = {}
        cur = list(pts.values())
        for p, q in product(cur, repeat=2):
            for a, b in product(range(n), repeat=2):
                if a == b:
                    continue
                u, v = dirs[a], dirs[b]
                det = (u.conjugate() * v).imag
                r = ((q - p).conjugate() * v).imag / det
                z = p + r * u
                k = key(z)
                if k not in pts and k not in found:
                    found[k] = z
        pts.update(found)
        counts.append(len(found))
    return tuple(counts)


def exact_brute_force(n: int, depth: int) -> tuple[int, ...]:
    N = 2 * n
    pts = {CycNum.zero(N), CycNum.one(N)}
    counts = [2]
    for _ in range(depth):
        found = set()
        for p, q in product(pts, repeat=2):
            for a, b in product(range(n), repeat=2):
                if a != b:
                    z = intersect(Angle(n, a), Angle(n, b), p, q)
                    if z not in pts:
                        found.add(z)
        pts |= found
        counts.append(len(found))
    return tuple(counts)


@pytest.mark.parametrize("n,depth", sorted(FROZEN_COUNTS))
def test_counts_match_frozen(n, depth):
    assert generate(n, depth).counts == FROZEN_COUNTS[(n, depth)]


@pytest.mark.parametrize("n,depth", [(3, 4), (4, 2), (5, 2)])
def test_counts_match_float_oracle(n, depth):
    assert float_brute_force(n, depth) == FROZEN_COUNTS[(n, depth)]


@pytest.mark.parametrize("n,depth", [(3, 3), (4, 2)])
def test_counts_match_exact_point_pairs(n, depth):
    assert exact_brute_force(n, depth) == generate(n, depth).counts


def test_hexagonal_counts_deeper():
    assert generate(3, 6).counts == (2, 2, 4, 12, 40, 144, 544)


def test_seed_and_rejects_small_n():
    cs = seed(3)
    assert len(cs) == 2 and cs.depth == 0
    with pytest.raises(ValueError):
        seed(2)
    with pytest.raises(ValueError):
        generate(3, -1)


def test_first_round_n3():
    cs = generate(3, 1)
    assert set(cs.at_depth(1)) == {CycNum.zeta(6), CycNum.one(6) - CycNum.zeta(6)}


def test_contains_point():
    cs = generate(3, 3)
    assert contains_point(cs, CycNum.one(6)) == 0
    assert contains_point(cs, CycNum.rational(6, 2)) <= 3
    assert contains_point(cs, CycNum.rational(6, -1)) <= 3
    assert contains_point(cs, CycNum.rational(6, 100)) is None
    with pytest.raises(ValueError):
        contains_point(cs, CycNum.one(8))


def test_hexagonal_points_are_eisenstein_integers():
    cs = generate(3, 5)
    assert all(ring_membership(z, 3) is Verdict.INTEGRAL for z in cs.points)


def test_half_appears_for_n4():
    cs = generate(4, 3)
    assert any(integrality_profile(subfield_coords(z, 4)) == {2} for z in cs.points)


@pytest.mark.parametrize("n,depth,allowed", [(3, 4, set()), (5, 2, set()), (4, 3, {2}),
                                             (6, 2, {2, 3}), (8, 2, {2}), (9, 2, {3})])
def test_denominators_stay_in_primes_of_n(n, depth, allowed):
    for z in generate(n, depth).points:
        coords = subfield_coords(z, n)
        assert coords is not None
        assert integrality_profile(coords) <= allowed
    assert set(primefactors(n)) >= allowed


def test_monotone_and_deterministic():
    a, b = generate(4, 2), generate(4, 2)
    assert set(generate(4, 1).points) <= set(a.points)
    assert a.sorted_points() == b.sorted_points()
    assert export_points(a) == export_points(b)


def test_witnesses_replay():
    cs = generate(5, 2)
    assert witness_failures(cs) == []
    assert len(cs.parents) == len(cs) - 2


def test_float_discrepancy_small():
    assert float_discrepancy(generate(6, 2)) < 1e-9


def test_budget_exhaustion_is_flagged():
    cs = generate(5, 3, budget=50)
    assert not cs.complete and len(cs) == 50
    assert cs.depth == 2
    with pytest.raises(BudgetExhausted):
        expand(cs)
    assert export_points(cs).splitlines()[0].endswith("complete=false")


def test_budget_partial_is_deterministic():
    a, b = generate(6, 3, budget=300), generate(6, 3, budget=300)
    assert a.sorted_points() == b.sorted_points()


def test_export_import_round_trip():
    cs = generate(4, 2)
    text = export_points(cs)
    header, *rows = text.splitlines()
    assert header == f"# n=4 depth=2 points={len(cs)} complete=true"
    assert import_points(text, 4) == cs.sorted_points()
    for row, z in zip(rows, cs.sorted_points()):
        _, x, y = row.split("\t")
        assert abs(complex(float(x), float(y)) - to_complex(z)) < 1e-9


def test_eisenstein_helper():
    assert eisenstein(1, 1) == CycNum.one(6) + CycNum.zeta(6, 2)
    assert abs(to_complex(eisenstein(0, 1)) - cmath.exp(2j * math.pi / 3)) < 1e-12


class TestDensityProbe:
    @pytest.mark.parametrize("n,expected", [(5, 0.6180340), (7, 0.5549581)])
    def test_prime(self, n, expected):
        z, mod = density_probe(n)
        assert abs(mod - expected) < 1e-6
        assert abs(mod - 1 / (2 * math.cos(math.pi / n))) < 1e-12
        assert z * (1 + CycNum.zeta(2 * n, 2)) == 1

    def test_composite(self):
        z, mod = density_probe(4)
        assert z == CycNum.rational(8, 1) / 4 and mod == 0.25

    def test_hexagonal_rejected(self):
        with pytest.raises(ValueError):
            density_probe(3)

    def test_twentieth_power(self):
        for n in (5, 7):
            z, _ = density_probe(n)
            assert abs(to_complex(z ** 20)) < 1e-4

    @pytest.mark.parametrize("n", [5, 7])
    def test_probe_is_in_closure(self, n):
        z, _ = density_probe(n)
        assert contains_point(generate(n, 1), z) == 1
