"""VTOF-alphabet synthesis: any permutation on n+1 lines, one borrowed line.

Building blocks are gate-list fragments over explicit lines (NOT, CNOT,
CCNOT, and the recursive multi-controlled NOT), plus the two generator
circuits: ``synth_t1`` swaps states 0 and 1 and ``synth_t2`` adds 1 mod
``2**n``. ``synth_general`` chains them per the generator decomposition of
the target and lowers everything to VTOF gates.

The helper lines these fragments take are value-independent: every fragment
restores each helper for both of its start values, which is what lets a
single extra line serve the whole netlist.
"""

from __future__ import annotations

from typing import Sequence

from .circuit import Circuit, GateInstance, LineRole, cknot, not_gate, vtof
from .errors import InsufficientLinesError, WidthOutOfRangeError
from .generators import TransformToken, decompose_generators
from .permutation import Permutation

GENERAL_MIN_WIDTH = 3
GENERAL_MAX_WIDTH = 15


def synth_not(target: int, helpers: tuple[int, int]) -> tuple[GateInstance, ...]:
    """Invert ``target`` with 4 VTOF gates; both helpers are restored for
    every combination of their start values."""
    p, q = helpers
    if len({target, p, q}) != 3:
        raise InsufficientLinesError(
            f"NOT needs three distinct lines, got target {target}, helpers {helpers}"
        )
    return (
        vtof(p, q, target),
        vtof(q, p, target),
        vtof(p, q, target),
        vtof(q, p, target),
    )


def synth_cnot(control: int, target: int, helper: int) -> tuple[GateInstance, ...]:
    """XOR ``control`` into ``target`` with 2 VTOF gates; the helper serves
    as the invert-line twice and ends restored for both start values."""
    if len({control, target, helper}) != 3:
        raise InsufficientLinesError(
            f"CNOT needs three distinct lines, got {control}, {target}, {helper}"
        )
    g = vtof(control, helper, target)
    return (g, g)


def synth_ccnot(c1: int, c2: int, target: int) -> tuple[GateInstance, ...]:
    """Toffoli on three lines: one VTOF (which also flips ``c2``) followed
    by the 4-gate NOT on ``c2`` to undo the flip. Self-contained: 5 gates,
    no lines beyond the three given."""
    return (vtof(c1, c2, target),) + synth_not(c2, (c1, target))


def synth_cknot(k: int, lines: Sequence[int]) -> tuple[GateInstance, ...]:
    """Multi-controlled NOT: flip ``lines[k]`` iff ``lines[:k]`` are all 1.

    ``lines`` is ``k`` controls, the target, then the free lines the
    construction may use as helpers (restored for both values, so borrowed
    lines qualify). Needs two free lines when ``k == 0``, one when
    ``k == 1`` or ``k >= 3``, none when ``k == 2``. The recursion halves
    ``k`` against a single free line: each level re-borrows its own split
    control and target for the level below.
    """
    if k < 0:
        raise ValueError(f"control count must be nonnegative, got {k}")
    if len(lines) < k + 1:
        raise InsufficientLinesError(
            f"CKNOT with {k} controls needs at least {k + 1} lines, got {len(lines)}"
        )
    controls = tuple(lines[:k])
    target = lines[k]
    free = tuple(lines[k + 1:])
    if k == 0:
        if len(free) < 2:
            raise InsufficientLinesError("NOT needs two free helper lines")
        return synth_not(target, (free[0], free[1]))
    if k == 1:
        if not free:
            raise InsufficientLinesError("CNOT needs one free helper line")
        return synth_cnot(controls[0], target, free[0])
    if k == 2:
        return synth_ccnot(controls[0], controls[1], target)
    if not free:
        raise InsufficientLinesError(
            f"CKNOT with {k} controls needs one free line beyond its {k + 1} gate lines"
        )
    x = free[0]
    child = synth_cknot(
        k - 1, (*controls[:-1], x, controls[-1], target, *free[1:])
    )
    join = synth_ccnot(controls[-1], x, target)
    return child + join + child + join


def synth_t1(n: int) -> Circuit:
    """Swap integer states 0 and 1, fix all others (macro-level, n lines).

    NOTs bracket a full-width CKNOT so the control product recognizes
    "all high bits zero", i.e. exactly the states 0 and 1.
    """
    if n < 2:
        raise WidthOutOfRangeError(f"t1 needs width >= 2, got {n}")
    nots = tuple(not_gate(l) for l in range(1, n))
    return Circuit(n, nots + (cknot(tuple(range(1, n)), n),) + nots)


def synth_t1_top(n: int) -> Circuit:
    """Swap the two largest states ``2**n - 2`` and ``2**n - 1`` (macro
    level): a single CKNOT recognizing "all high bits one"."""
    if n < 2:
        raise WidthOutOfRangeError(f"top swap needs width >= 2, got {n}")
    return Circuit(n, (cknot(tuple(range(1, n)), n),))


def synth_t2(n: int) -> Circuit:
    """Add 1 mod ``2**n`` (macro level, n lines).

    One CKNOT per carry length, emitted widest first so every gate reads
    the original low bits: the gate targeting line ``n - j`` fires iff all
    ``j`` lines below it are 1.
    """
    if n < 1:
        raise WidthOutOfRangeError(f"t2 needs width >= 1, got {n}")
    gates = tuple(
        cknot(tuple(range(n - j + 1, n + 1)), n - j) for j in range(n - 1, -1, -1)
    )
    return Circuit(n, gates)


def synth_general(p: Permutation) -> Circuit:
    """Compile any permutation to a VTOF netlist on ``width + 1`` lines.

    The extra line is borrowed: it may hold either value and is always
    restored. Pipeline: generator decomposition, one t1/t2 macro block per
    token, then macro expansion (full-width CKNOTs borrow the extra line;
    narrower ones borrow a free data line).
    """
    n = p.width
    if not GENERAL_MIN_WIDTH <= n <= GENERAL_MAX_WIDTH:
        raise WidthOutOfRangeError(
            f"general synthesis supports widths "
            f"{GENERAL_MIN_WIDTH}..{GENERAL_MAX_WIDTH}, got {n}"
        )
    t1_gates = synth_t1(n).gates
    t2_gates = synth_t2(n).gates
    gates: list[GateInstance] = []
    for tok in decompose_generators(p, "standard"):
        gates.extend(t1_gates if tok is TransformToken.T1 else t2_gates)
    macro = Circuit(
        n + 1,
        tuple(gates),
        roles=(LineRole.DATA,) * n + (LineRole.BORROWED,),
    )
    from .expand import expand_macros

    return expand_macros(macro, "VTOF")
