"""Exact computations with origami rings R(U_n).

R(U_n) is the set of points reachable from 0 and 1 by intersecting lines
whose directions are multiples of pi/n.  The package provides exact
cyclotomic arithmetic, the intersection operator, breadth-first closure
generation, the cyclotomic identities that pin the ring down, and fold
programs that construct any of its elements.
"""

from .closure import ClosureSet, contains_point, density_probe, expand, generate
from .cyclotomic import (CycNum, cyc_add, cyc_conj, cyc_inv, cyc_mul, cyc_sub, cyclotomic_poly,
                         integrality_profile, is_real, subfield_coords, to_complex)
from .geometry import Angle, Line, convexity_maps, intersect, intersect_float, pairing, project
from .literal import format_literal, parse_literal
from .numtheory import (MonomialExpr, SineQuotient, Verdict, check_eqn2, coprime_unit_product,
                        decompose, elementary_monomial, inverse_prime_product, quotient_1mz,
                        ring_membership, sine_quotient_value)
from .synth import (FoldProgram, Instruction, replay_translated, run, synth_add, synth_element,
                    synth_monomial_product, synth_neg, synth_neg_one, synth_two, verify)

__version__ = "0.1.0"
