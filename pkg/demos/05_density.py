"""
Density for n >= 4
==================

For n >= 4 the ring has a nonzero element inside the unit disc, so its
powers shrink towards 0 and the ring is dense in the plane.
"""

import math

from origami_rings.closure import density_probe, generate, max_abs
from origami_rings.cyclotomic import to_complex

for n in (4, 5, 6, 7):
    z, mod = density_probe(n)
    print(f"n={n}: |{z}| = {mod:.7f}; |z^20| = {abs(to_complex(z ** 20)):.2e}")

# the prime case matches 1 / (2 cos(pi/n))
for n in (5, 7):
    print(n, 1 / (2 * math.cos(math.pi / n)))

# the closure fills the plane faster than the hexagonal lattice
for n in (3, 5):
    cs = generate(n, 2)
    print(f"n={n}: {len(cs)} points after two rounds, max |z| = {max_abs(cs.points):.3f}")
