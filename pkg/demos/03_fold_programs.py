"""
Fold programs
=============

A fold program is a list of intersections starting from the points 0 and
1.  Running it exactly proves that its last value is constructible.
"""

from origami_rings.cyclotomic import CycNum
from origami_rings.numtheory import decompose
from origami_rings.synth import run, synth_add, synth_element, synth_two, verify

two = synth_two(3)
for ins in two.instructions:
    print(ins)
print("registers:", [str(r) for r in run(two).registers])

# programs compose: 2 + 2
four = synth_add(two, two)
print("2 + 2 uses", len(four), "folds:", verify(four, CycNum.rational(6, 4)).diagnostic)

# any ring element: decompose into monomials, then synthesize
n = 6
target = CycNum.rational(2 * n, 1) / n + CycNum.zeta(2 * n, 2)
expr = decompose(target, n)
print("terms:", len(expr.terms))
prog = synth_element(expr)
print(len(prog), "folds ->", verify(prog, target).diagnostic)

# programs serialize to JSON
print(prog.to_json()[:120], "...")
