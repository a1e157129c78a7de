"""Fold programs: executable constructions of points of R(U_n).

A program is a list of single-assignment instructions over integer
registers.  Registers 0 and 1 hold the seed points 0 and 1; instruction i
writes register i + 2 with I_{u,v}(reg[p], reg[q]).  The program's result
is its last register (register 1 for the empty program).

Synthesizers follow the closure proofs: 2 and -1 from three folds each,
affine replay of a program on new seeds, addition, negation, monomial
products with phase bookkeeping, and whole ring elements from a
:class:`~origami_rings.numtheory.MonomialExpr`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .cyclotomic import CycNum, is_real, to_complex
from .geometry import Angle, Line, intersect, intersect_float
from .numtheory import Factor, MonomialExpr


class MalformedProgramError(ValueError):
    def __init__(self, index: int, reason: str):
        super().__init__(f"instruction {index}: {reason}")
        self.index = index
        self.reason = reason


@dataclass(frozen=True)
class Instruction:
    dest: int
    u: int
    v: int
    p: int
    q: int


@dataclass(frozen=True)
class FoldProgram:
    n: int
    instructions: tuple[Instruction, ...] = ()

    def __len__(self) -> int:
        return len(self.instructions)

    @property
    def result_register(self) -> int:
        return self.instructions[-1].dest if self.instructions else 1

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n,
            "instructions": [
                {"dest": i.dest, "u": i.u, "v": i.v, "p": i.p, "q": i.q}
                for i in self.instructions],
        })

    @classmethod
    def from_json(cls, text: str) -> "FoldProgram":
        data = json.loads(text)
        if not isinstance(data, dict) or "n" not in data or "instructions" not in data:
            raise ValueError("expected an object with 'n' and 'instructions'")
        instrs = []
        for j, item in enumerate(data["instructions"]):
            try:
                instrs.append(Instruction(**{k: int(item[k]) for k in ("dest", "u", "v", "p", "q")}))
            except (KeyError, TypeError, ValueError) as exc:
                raise MalformedProgramError(j, f"bad instruction record {item!r}") from exc
        prog = cls(n=int(data["n"]), instructions=tuple(instrs))
        validate(prog)
        return prog


@dataclass(frozen=True)
class Trace:
    registers: tuple[CycNum, ...]

    @property
    def final(self) -> Optional[CycNum]:
        """Last assigned value; None for the empty program."""
        return self.registers[-1] if len(self.registers) > 2 else None

    @property
    def result(self) -> CycNum:
        return self.registers[-1]


def validate(prog: FoldProgram) -> None:
    if prog.n < 2:
        raise MalformedProgramError(0, f"angle group order {prog.n} < 2")
    for i, ins in enumerate(prog.instructions):
        if ins.dest != i + 2:
            raise MalformedProgramError(i, f"dest {ins.dest} is not the next register {i + 2}")
        if not (0 <= ins.u < prog.n and 0 <= ins.v < prog.n):
            raise MalformedProgramError(i, f"angle out of range for U_{prog.n}")
        if ins.u == ins.v:
            raise MalformedProgramError(i, "equal angles")
        for src in (ins.p, ins.q):
            if not 0 <= src < ins.dest:
                raise MalformedProgramError(i, f"source register {src} not yet assigned")


def run(prog: FoldProgram) -> Trace:
    validate(prog)
    n, N = prog.n, 2 * prog.n
    regs = [CycNum.zero(N), CycNum.one(N)]
    for ins in prog.instructions:
        regs.append(intersect(Angle(n, ins.u), Angle(n, ins.v), regs[ins.p], regs[ins.q]))
    return Trace(tuple(regs))


def value(prog: FoldProgram) -> CycNum:
    return run(prog).result


def run_float(prog: FoldProgram) -> list[complex]:
    validate(prog)
    regs = [0j, 1 + 0j]
    for ins in prog.instructions:
        u, v = Angle(prog.n, ins.u).to_complex(), Angle(prog.n, ins.v).to_complex()
        regs.append(intersect_float(u, v, regs[ins.p], regs[ins.q]))
    return regs


def check_trace(prog: FoldProgram, trace: Trace) -> list[int]:
    """Indices of instructions whose value misses one of its two lines."""
    bad = []
    for i, ins in enumerate(prog.instructions):
        z = trace.registers[ins.dest]
        lu = Line(trace.registers[ins.p], Angle(prog.n, ins.u))
        lv = Line(trace.registers[ins.q], Angle(prog.n, ins.v))
        if not (lu.contains(z) and lv.contains(z)):
            bad.append(i)
    return bad


class _Builder:
    """Accumulates instructions while tracking exact register values."""

    def __init__(self, n: int):
        self.n = n
        self.instrs: list[Instruction] = []
        self.values = [CycNum.zero(2 * n), CycNum.one(2 * n)]
        self._neg_one: Optional[int] = None

    def emit(self, u: int, v: int, p: int, q: int) -> int:
        dest = len(self.values)
        u, v = u % self.n, v % self.n
        self.values.append(intersect(Angle(self.n, u), Angle(self.n, v), self.values[p], self.values[q]))
        self.instrs.append(Instruction(dest, u, v, p, q))
        return dest

    def replay(self, prog: FoldProgram, r0: int, r1: int) -> int:
        """Re-run ``prog`` with seeds reg[r0], reg[r1] in place of 0, 1.

        Needs reg[r1] - reg[r0] real; every replayed value x then equals
        reg[r0] + (reg[r1] - reg[r0]) * (original x).
        """
        if prog.n != self.n:
            raise ValueError(f"program is over U_{prog.n}, builder over U_{self.n}")
        s0, s1 = self.values[r0], self.values[r1]
        scale = s1 - s0
        if scale.is_zero() or not is_real(scale):
            raise ValueError("replay seeds must differ by a nonzero real")
        original = run(prog).registers
        mapping = {0: r0, 1: r1}
        for ins in prog.instructions:
            mapping[ins.dest] = self.emit(ins.u, ins.v, mapping[ins.p], mapping[ins.q])
            if self.values[mapping[ins.dest]] != s0 + scale * original[ins.dest]:
                raise AssertionError(f"replay diverged at register {ins.dest}")
        return mapping[prog.result_register]

    def neg_one(self) -> int:
        if self._neg_one is None:
            self._neg_one = self.replay(synth_neg_one(self.n), 0, 1)
        return self._neg_one

    def double_from(self, r0: int, r1: int) -> int:
        """2*reg[r1] - reg[r0], by replaying the construction of 2."""
        return self.replay(synth_two(self.n), r0, r1)

    def integer(self, c: int) -> int:
        if c == 0:
            return 0
        if c < 0:
            return self.double_from(self.integer(-c), 0)
        reg = 1
        for bit in bin(c)[3:]:
            reg = self.double_from(self.neg_one() if bit == "1" else 0, reg)
        return reg

    def program(self, result: Optional[int] = None) -> FoldProgram:
        if result is not None and result != (self.instrs[-1].dest if self.instrs else 1):
            self.emit(0, 1, result, result)  # I_{u,v}(r, r) = r
        return FoldProgram(self.n, tuple(self.instrs))


def _need_n(n: int) -> None:
    if n < 3:
        raise ValueError(f"constructions need at least 3 angles, got n={n}")


def synth_two(n: int) -> FoldProgram:
    _need_n(n)
    u, v = 1, 2
    return FoldProgram(n, (
        Instruction(2, u, v, 0, 1),
        Instruction(3, u, 0, 1, 2),
        Instruction(4, 0, v, 0, 3),
    ))


def synth_neg_one(n: int) -> FoldProgram:
    _need_n(n)
    u, v = 1, 2
    return FoldProgram(n, (
        Instruction(2, u, v, 0, 1),
        Instruction(3, v, 0, 0, 2),
        Instruction(4, 0, u, 0, 3),
    ))


def replay_translated(host: FoldProgram, prog: FoldProgram, seed0: int, seed1: int) -> FoldProgram:
    """Append ``prog`` to ``host`` re-seeded at registers seed0, seed1.

    The seeds must satisfy reg[seed1] - reg[seed0] = 1; the appended result is
    prog's value plus reg[seed0].
    """
    b = _Builder(host.n)
    b.replay(host, 0, 1)
    if b.values[seed1] - b.values[seed0] != 1:
        raise ValueError("seed registers must differ by exactly 1")
    result = b.replay(prog, seed0, seed1)
    return b.program(result)


def synth_add(prog_p: FoldProgram, prog_q: FoldProgram) -> FoldProgram:
    if prog_p.n != prog_q.n:
        raise ValueError(f"programs over U_{prog_p.n} and U_{prog_q.n}")
    b = _Builder(prog_p.n)
    p = b.replay(prog_p, 0, 1)
    two = b.replay(synth_two(b.n), 0, 1)
    p1 = b.replay(prog_p, 1, two)
    return b.program(b.replay(prog_q, p, p1))


def synth_neg(prog_p: FoldProgram) -> FoldProgram:
    b = _Builder(prog_p.n)
    m = b.neg_one()
    return b.program(b.replay(prog_p, 0, m))


def synth_monomial_product(factors: Sequence[Factor], n: int) -> FoldProgram:
    """One fold per elementary factor, rotating each by the accumulated phase."""
    b = _Builder(n)
    cur, phase = 1, 0
    for uk, vk in factors:
        if (uk - vk) % n == 0:
            raise ValueError(f"factor ({uk}, {vk}) has equal angles")
        cur = b.emit(phase + uk, phase + vk, cur, 0)
        phase += vk
    return b.program()


def synth_integer(c: int, n: int) -> FoldProgram:
    b = _Builder(n)
    return b.program(b.integer(c))


def synth_scaled(prog: FoldProgram, c: int) -> FoldProgram:
    """Program for c * value(prog), replaying prog on the seeds 0 and c."""
    b = _Builder(prog.n)
    creg = b.integer(c)
    if c == 0:
        return b.program(0)
    return b.program(b.replay(prog, 0, creg))


def synth_element(expr: MonomialExpr) -> FoldProgram:
    n = expr.n
    _need_n(n)
    terms = [synth_scaled(synth_monomial_product(fs, n), c) for c, fs in expr.terms if c]
    if not terms:
        return _Builder(n).program(0)
    acc = terms[-1]
    for t in reversed(terms[:-1]):
        acc = synth_add(t, acc)
    return acc


@dataclass(frozen=True)
class Verification:
    ok: bool
    diagnostic: str = ""
    register: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


def verify(prog: FoldProgram, expected: CycNum,
           expected_trace: Optional[Sequence[CycNum]] = None) -> Verification:
    """Run ``prog`` and compare its result with ``expected`` exactly."""
    try:
        trace = run(prog)
    except MalformedProgramError as exc:
        return Verification(False, str(exc), None)
    if expected_trace is not None:
        for reg, (got, want) in enumerate(zip(trace.registers, expected_trace)):
            if got != want:
                return Verification(False, f"register {reg}: got {got}, expected {want}", reg)
    if trace.result != expected:
        reg = prog.result_register
        approx = to_complex(trace.result)
        return Verification(
            False,
            f"register {reg}: got {trace.result} (~{approx.real:.12g}{approx.imag:+.12g}i), "
            f"expected {expected}",
            reg)
    return Verification(True, f"ok: register {prog.result_register} = {expected}", prog.result_register)
