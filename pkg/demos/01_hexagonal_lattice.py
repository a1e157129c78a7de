"""
The hexagonal lattice
=====================

With three fold directions the origami ring is the ring of Eisenstein
integers Z[zeta_3].  Generate it breadth-first, classify every point and
write an SVG picture next to this script.
"""

from pathlib import Path

from origami_rings.closure import contains_point, eisenstein, generate
from origami_rings.numtheory import ring_membership
from origami_rings.svg import render_svg

cs = generate(3, 5)
print("new points per round:", cs.counts)

# every point is an Eisenstein integer
print({ring_membership(z, 3).describe(3) for z in cs.points})

# small lattice points and the round that first reaches them
for a, b in [(2, 0), (-1, 0), (1, 1), (-2, 2)]:
    print(f"{a:+d} {b:+d}*zeta_3 -> depth", contains_point(cs, eisenstein(a, b)))

out = Path(__file__).with_name("hexagonal.svg")
out.write_text(render_svg(cs.sorted_points(), radius=4, title="R(U_3), five rounds"))
print("wrote", out)
