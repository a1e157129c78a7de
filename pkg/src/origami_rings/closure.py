"""Breadth-first generation of the origami ring R(U_n) from the seeds 0 and 1.

Each round intersects every line through a known point with every line in a
different direction through a known point.  The intersection of L_u(p) and
L_v(q) depends only on the two lines, and a line L_u(p) is determined by the
value <u, p>, so a round works on distinct lines instead of point pairs.
Pairs of lines that were both known before the round are skipped, since
their intersection was produced in an earlier round.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional

from sympy import isprime

from .cyclotomic import CycNum, to_complex
from .geometry import Angle, direction_coefficient, intersect, intersect_float, line_key
from .literal import format_literal, parse_literal

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 200_000

Parent = tuple[int, int, CycNum, CycNum]  # (u.k, v.k, p, q)


@dataclass
class ClosureSet:
    """Points generated so far, each with its discovery depth and one witness.

    Treat instances as immutable; :func:`expand` returns a fresh object.
    """

    n: int
    depth: int
    points: dict[CycNum, int]
    parents: dict[CycNum, Parent]
    frontier: frozenset[CycNum]
    counts: tuple[int, ...]
    complete: bool = True
    budget: int = DEFAULT_BUDGET
    # lines[k] maps <u_k, p> to the representative point p of that line
    _lines: dict[int, dict[CycNum, CycNum]] = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, z: CycNum) -> bool:
        return z in self.points

    def sorted_points(self) -> list[CycNum]:
        return sorted(self.points, key=lambda z: (self.points[z], z.sort_key()))

    def at_depth(self, d: int) -> list[CycNum]:
        return sorted((z for z, dz in self.points.items() if dz == d), key=CycNum.sort_key)


class BudgetExhausted(RuntimeError):
    def __init__(self, partial: ClosureSet):
        super().__init__(
            f"point budget {partial.budget} exhausted at depth {partial.depth} "
            f"({len(partial)} points); result is incomplete")
        self.partial = partial


def seed(n: int, budget: int = DEFAULT_BUDGET) -> ClosureSet:
    if n < 3:
        raise ValueError(f"closure needs at least 3 angles, got n={n}")
    N = 2 * n
    zero, one = CycNum.zero(N), CycNum.one(N)
    return ClosureSet(
        n=n, depth=0, points={zero: 0, one: 0}, parents={},
        frontier=frozenset({zero, one}), counts=(2,), budget=budget,
        _lines={k: {} for k in range(n)})


def expand(cs: ClosureSet) -> ClosureSet:
    """One round: add every intersection of lines through known points.

    If the point budget is reached the returned set has ``complete=False``
    and holds the points found before the cap, in deterministic order.
    """
    if not cs.complete:
        raise BudgetExhausted(cs)
    n = cs.n
    dirs = [Angle(n, k) for k in range(n)]
    old_lines = cs._lines
    lines: dict[int, dict[CycNum, CycNum]] = {}
    fresh: dict[int, list[CycNum]] = {}
    for u in dirs:
        table = dict(old_lines[u.k])
        added = []
        for p in sorted(cs.frontier, key=CycNum.sort_key):
            key = line_key(u, p)
            if key not in table:
                table[key] = p
                added.append(key)
        lines[u.k] = table
        fresh[u.k] = added

    ordered = {k: sorted(t, key=CycNum.sort_key) for k, t in lines.items()}
    is_new = {k: set(fresh[k]) for k in fresh}

    points = dict(cs.points)
    parents = dict(cs.parents)
    new_depth = cs.depth + 1
    found: list[CycNum] = []
    complete = True
    for u in dirs:
        for v in dirs[u.k + 1:]:
            cu = direction_coefficient(u, v)
            cv = direction_coefficient(v, u)
            left = [(a, a * cu, a in is_new[u.k]) for a in ordered[u.k]]
            right = [(b, b * cv, b in is_new[v.k]) for b in ordered[v.k]]
            for a, sa, a_new in left:
                for b, sb, b_new in right:
                    if not (a_new or b_new):
                        continue
                    z = sa + sb
                    if z in points:
                        continue
                    if len(points) >= cs.budget:
                        complete = False
                        break
                    points[z] = new_depth
                    parents[z] = (u.k, v.k, lines[u.k][a], lines[v.k][b])
                    found.append(z)
                if not complete:
                    break
            if not complete:
                break
        if not complete:
            break

    if not complete:
        log.warning("budget %d exhausted during round %d", cs.budget, new_depth)
    return ClosureSet(
        n=n, depth=new_depth, points=points, parents=parents,
        frontier=frozenset(found), counts=cs.counts + (len(found),),
        complete=complete, budget=cs.budget, _lines=lines)


def generate(n: int, depth: int, budget: int = DEFAULT_BUDGET) -> ClosureSet:
    """Run ``depth`` rounds from {0, 1}; stops early (flagged incomplete) on budget exhaustion."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    cs = seed(n, budget)
    for _ in range(depth):
        cs = expand(cs)
        log.info("n=%d depth=%d points=%d", n, cs.depth, len(cs))
        if not cs.complete:
            break
    return cs


def contains_point(cs: ClosureSet, target: CycNum) -> Optional[int]:
    if target.N != 2 * cs.n:
        raise ValueError(f"target conductor {target.N} != {2 * cs.n}")
    return cs.points.get(target)


def witness_failures(cs: ClosureSet) -> list[CycNum]:
    """Points whose recorded parent tuple does not re-evaluate to the point."""
    bad = []
    for z, (uk, vk, p, q) in cs.parents.items():
        if intersect(Angle(cs.n, uk), Angle(cs.n, vk), p, q) != z:
            bad.append(z)
        elif not (cs.points[p] < cs.points[z] and cs.points[q] < cs.points[z]):
            bad.append(z)
    return bad


def float_discrepancy(cs: ClosureSet) -> float:
    """Largest gap between the exact embedding and a float replay of each witness."""
    worst = 0.0
    for z, (uk, vk, p, q) in cs.parents.items():
        u, v = Angle(cs.n, uk).to_complex(), Angle(cs.n, vk).to_complex()
        approx = intersect_float(u, v, to_complex(p), to_complex(q))
        worst = max(worst, abs(approx - to_complex(z)))
    return worst


def density_probe(n: int) -> tuple[CycNum, float]:
    """A nonzero element of R(U_n) strictly inside the unit circle."""
    if n < 4:
        raise ValueError("R(U_3) is discrete; density needs n >= 4")
    N = 2 * n
    if isprime(n):
        z = (CycNum.one(N) + CycNum.zeta(N, 2)).inverse()
    else:
        z = CycNum.rational(N, 1) / n
    return z, abs(to_complex(z))


# ---------------------------------------------------------------------------
# text export

def export_points(cs: ClosureSet) -> str:
    """One point per line: exact literal, then x and y to 12 significant digits."""
    out = [f"# n={cs.n} depth={cs.depth} points={len(cs)} complete={str(cs.complete).lower()}"]
    for z in cs.sorted_points():
        c = to_complex(z)
        out.append(f"{format_literal(z)}\t{_fmt(c.real)}\t{_fmt(c.imag)}")
    return "\n".join(out) + "\n"


def _fmt(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def import_points(text: str, n: int) -> list[CycNum]:
    pts = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        lit = line.split("\t")[0]
        pts.append(parse_literal(lit, 2 * n))
    return pts


def eisenstein(a: int, b: int) -> CycNum:
    """a + b*zeta_3 in the conductor-6 field."""
    return CycNum.rational(6, a) + CycNum.zeta(6, 2) * b


def max_abs(points: Iterable[CycNum]) -> float:
    return max((abs(to_complex(z)) for z in points), default=0.0)

