import cmath
import math
from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import X, cyc_strategy, random_cyc, sym_reduce
from origami_rings.cyclotomic import (
    CycNum, cyc_add, cyc_conj, cyc_inv, cyc_mul, cyc_sub, cyclotomic_poly, divisors, euler_phi,
    from_subfield_coords, integrality_profile, is_real, poly_divmod, poly_mul, poly_trim,
    subfield_coords, to_complex)


def P(*cs):
    return poly_trim(cs)


class TestCyclotomicPoly:
    def test_base_case(self):
        assert cyclotomic_poly(1) == P(-1, 1)

    def test_d4_by_exact_division(self):
        # (X^4 - 1) / ((X - 1)(X + 1)), remainder must vanish
        q, r = poly_divmod(P(-1, 0, 0, 0, 1), poly_mul(P(-1, 1), P(1, 1)))
        assert r == () and q == P(1, 0, 1)
        assert cyclotomic_poly(4) == q

    def test_d6_by_exact_division(self):
        den = poly_mul(poly_mul(P(-1, 1), P(1, 1)), P(1, 1, 1))
        q, r = poly_divmod(P(-1, 0, 0, 0, 0, 0, 1), den)
        assert r == () and q == P(1, -1, 1)
        assert cyclotomic_poly(6) == q

    @pytest.mark.parametrize("d", range(1, 61))
    def test_matches_sympy_and_degree(self, d):
        ours = cyclotomic_poly(d)
        theirs = sympy.Poly(sympy.cyclotomic_poly(d, X), X).all_coeffs()[::-1]
        assert ours == tuple(Fraction(int(c)) for c in theirs)
        assert len(ours) - 1 == euler_phi(d)
        assert all(c.denominator == 1 for c in ours)

    @pytest.mark.parametrize("m", range(1, 61))
    def test_product_over_divisors(self, m):
        prod = (Fraction(1),)
        for d in divisors(m):
            prod = poly_mul(prod, cyclotomic_poly(d))
        assert prod == P(-1, *([0] * (m - 1)), 1)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            cyclotomic_poly(0)


class TestFieldOps:
    def test_additive_identity(self):
        assert cyc_add(CycNum.one(6), CycNum.zero(6)) == CycNum.one(6)

    def test_mul_below_phi(self):
        z = CycNum.zeta(8)
        assert cyc_mul(z, z).coeffs == (0, 0, 1, 0)

    def test_mul_reduces_mod_phi6(self):
        z = CycNum.zeta(6)
        # remainder of X^2 by X^2 - X + 1 is X - 1
        _, r = poly_divmod(P(0, 0, 1), cyclotomic_poly(6))
        assert r == P(-1, 1)
        assert (z * z).coeffs == (-1, 1)

    def test_inverse_examples(self):
        assert cyc_inv(CycNum.one(6)) == CycNum.one(6)
        i = CycNum.zeta(4)
        assert cyc_inv(i) == -i
        a = CycNum.one(10) + CycNum.zeta(10)
        assert a * cyc_inv(a) == 1

    def test_zero_division(self):
        with pytest.raises(ZeroDivisionError):
            cyc_inv(CycNum.zero(12))
        with pytest.raises(ZeroDivisionError):
            CycNum.one(12) / 0

    def test_conductor_mismatch(self):
        with pytest.raises(ValueError):
            cyc_add(CycNum.one(6), CycNum.one(8))
        with pytest.raises(ValueError):
            CycNum.one(6) * CycNum.one(8)

    def test_conj_examples(self):
        assert cyc_conj(CycNum.one(8)) == CycNum.one(8)
        i = CycNum.zeta(4)
        assert cyc_conj(i) == -i

    def test_is_real_examples(self):
        assert is_real(CycNum.rational(6, Fraction(2, 3)))
        z = CycNum.zeta(6)
        assert not is_real(z)
        assert is_real(z + z.conj())

    def test_sub(self):
        z = CycNum.zeta(10, 3)
        assert cyc_sub(z, z).is_zero()

    def test_canonical_hash_equality(self):
        a = CycNum.from_coeffs(6, [Fraction(2, 4), 0, 0])  # z^2 = z - 1 folds in
        b = CycNum.from_coeffs(6, [Fraction(1, 2)])
        assert a == b and hash(a) == hash(b)
        assert CycNum.zeta(6, 6) == 1

    @pytest.mark.parametrize("N", [5, 8, 12, 15, 24])
    def test_mul_and_inverse_against_sympy(self, N, rng):
        for _ in range(10):
            a, b = random_cyc(rng, N), random_cyc(rng, N)
            pa = sum(c * X**j for j, c in enumerate(a.coeffs))
            pb = sum(c * X**j for j, c in enumerate(b.coeffs))
            assert (a * b).coeffs == sym_reduce(pa * pb, N)
            if not a.is_zero():
                assert a.inverse().coeffs == sym_reduce(1 / pa, N)


@pytest.mark.parametrize("N", [6, 8, 10, 24])
class TestRingAxioms:
    @settings(max_examples=40, deadline=None)
    @given(data=st.data())
    def test_axioms(self, N, data):
        a, b, c = (data.draw(cyc_strategy(N)) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a and a + b == b + a
        assert a * (b + c) == a * b + a * c
        assert (a.conj()).conj() == a
        assert (a * b).conj() == a.conj() * b.conj()

    @settings(max_examples=40, deadline=None)
    @given(data=st.data())
    def test_inverse(self, N, data):
        a = data.draw(cyc_strategy(N))
        if not a.is_zero():
            assert a * a.inverse() == 1


class TestEmbedding:
    def test_examples(self):
        assert to_complex(CycNum.one(8)) == 1 + 0j
        z8 = to_complex(CycNum.zeta(8))
        assert abs(z8 - complex(math.cos(math.pi / 4), math.sin(math.pi / 4))) < 1e-12
        z6 = to_complex(CycNum.zeta(6))
        assert abs(z6 - complex(math.cos(math.pi / 3), math.sin(math.pi / 3))) < 1e-12
        assert abs(z8.real - 0.7071067) < 1e-7 and abs(z6.imag - 0.8660254) < 1e-7

    def test_high_precision(self):
        v = to_complex(CycNum.zeta(8), precision=200)
        with mpmath.workprec(200):
            assert abs(v - mpmath.expjpi(mpmath.mpf(1) / 4)) < mpmath.mpf(2) ** -190

    def test_rejects_low_precision(self):
        with pytest.raises(ValueError):
            to_complex(CycNum.one(6), precision=24)

    @pytest.mark.parametrize("n", [3, 4, 6, 12, 15])
    def test_root_alignment(self, n):
        N = 2 * n
        for d in divisors(n):
            got = to_complex(CycNum.zeta(N, 2 * (n // d)))
            assert abs(got - cmath.exp(2j * math.pi / d)) < 1e-9

    @pytest.mark.parametrize("N", [6, 8, 10, 24])
    def test_homomorphism(self, N, rng):
        for _ in range(50):
            a, b = random_cyc(rng, N), random_cyc(rng, N)
            assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-9

    @pytest.mark.parametrize("N", [6, 8, 10, 24])
    def test_homomorphism_large_height(self, N, rng):
        # heights near 1e6 make products ~1e12; an absolute 1e-9 needs extra bits
        for _ in range(20):
            a = random_cyc(rng, N, height=10**6 - 1, dens=(1, 7))
            b = random_cyc(rng, N, height=10**6 - 1, dens=(1, 3))
            with mpmath.workprec(128):
                lhs = to_complex(a * b, precision=128)
                rhs = to_complex(a, precision=128) * to_complex(b, precision=128)
                assert abs(lhs - rhs) < 1e-9


class TestSubfield:
    def test_rational(self):
        assert subfield_coords(CycNum.rational(8, 5), 4) == (5, 0)

    def test_zeta8_not_in_qi(self):
        assert subfield_coords(CycNum.zeta(8), 4) is None

    def test_zeta8_squared(self):
        assert subfield_coords(CycNum.zeta(8, 2), 4) == (0, 1)

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 8, 9, 12])
    def test_round_trip(self, n, rng):
        N = 2 * n
        for _ in range(20):
            coords = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(euler_phi(n))]
            x = from_subfield_coords(N, n, coords)
            got = subfield_coords(x, n)
            assert got == tuple(coords)
            assert from_subfield_coords(N, n, got) == x

    def test_odd_n_fields_coincide(self, rng):
        for _ in range(10):
            x = random_cyc(rng, 10)
            assert subfield_coords(x, 5) is not None


class TestIntegralityProfile:
    def test_examples(self):
        assert integrality_profile((1, -1)) == frozenset()
        assert integrality_profile((Fraction(1, 2), 0)) == {2}
        assert integrality_profile((Fraction(1, 6), Fraction(1, 4))) == {2, 3}
