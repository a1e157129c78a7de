"""
Cyclotomic identities
=====================

The shape of the ring comes from the quotients (1 - zeta^a)/(1 - zeta^b).
For prime n they are units; for composite n they can carry denominators,
and suitable products give exactly 1/p for each prime p dividing n.
"""

from origami_rings.cyclotomic import integrality_profile, subfield_coords
from origami_rings.numtheory import (check_eqn2, coprime_unit_product, inverse_prime_product,
                                     quotient_1mz)

# n is the product of 1 - zeta_n^k over k = 1..n-1
for n in (5, 8, 12):
    print(n, "=", check_eqn2(n))

# over k coprime to n = pq the product is 1
print("n=15:", coprime_unit_product(15))


def denominators(n):
    out = set()
    for a in range(1, n):
        for b in range(1, n):
            out |= integrality_profile(subfield_coords(quotient_1mz(a, b, n), n))
    return sorted(out)


for n in (7, 9, 10, 12):
    print(f"n={n}: primes in quotient denominators", denominators(n))

cert = inverse_prime_product(12, 3)
print("1/3 in R(U_12):", cert.value(), "from", len(cert.pairs), "quotients and multiplier", cert.multiplier)
