"""
The intersection operator
=========================

I_{u,v}(p, q) is the meeting point of the line through p in direction u
and the line through q in direction v.  Exact arithmetic lets us check its
algebraic properties with ==.
"""

import random

from origami_rings.cyclotomic import CycNum, to_complex
from origami_rings.geometry import Angle, convexity_maps, intersect, project

n, N = 5, 10
u, v = Angle(n, 1), Angle(n, 3)
p = CycNum.one(N) + CycNum.zeta(N, 2)
q = CycNum.rational(N, 2)

z = intersect(u, v, p, q)
print("I_{u,v}(p, q) =", z, "~", to_complex(z))

# symmetric in the two lines
print("symmetry:", z == intersect(v, u, q, p))

# translation equivariance
t = CycNum.zeta(N, 7) * 3
print("translation:", intersect(u, v, p + t, q + t) == z + t)

# rotation by w in U_n rotates both directions
w = Angle(n, 2)
wr = w.representative()
print("rotation:", wr * z == intersect(w * u, w * v, wr * p, wr * q))

# the operator splits into two rank-one real-linear maps
maps = convexity_maps(u, v)
print("A + B = identity:", maps.a1 + maps.a2 == 1, (maps.b1 + maps.b2).is_zero())
print("A(p) + B(q) == I:", maps(p, q) == z)

# projecting along u onto the line through 0 in direction v
print("projection of p:", project(u, v, p))

rng = random.Random(0)
samples = [(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(5)]
print("random check:", all(
    intersect(u, v, CycNum.rational(N, a), CycNum.rational(N, b))
    == intersect(u, v, CycNum.rational(N, a), CycNum.zero(N)) + intersect(v, u, CycNum.rational(N, b), CycNum.zero(N))
    for a, b in samples))
