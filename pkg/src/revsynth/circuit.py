"""Circuit model: gates, line roles, and exhaustive simulation.

Lines are numbered ``1 .. width`` and read MSB-first: line 1 carries the most
significant bit of a state integer, line ``width`` the least significant.
Gate lists apply in list order (first gate first).

Two primitive gates exist, each on three distinct lines:

* ``VTOF (control, invert, target)`` — flips ``invert`` unconditionally and
  XORs ``control AND invert`` (the pre-flip value) into ``target``.
* ``FRED (control, t1, t2)`` — swaps ``t1, t2`` when ``control`` is 1.

Two macro gates name the multi-controlled versions: ``CKNOT`` (k controls,
one target; ``k=0`` is NOT, ``k=1`` is CNOT) and ``CKSWAP`` (k controls, two
targets; ``k=0`` is SWAP, ``k=1`` has FRED semantics).

Simulation is always exhaustive over all ``2**width`` states. The fast path
is bitsliced: one Python bignum per line holds that line's value across every
state (bit ``s`` of the mask for line ``l`` is line ``l``'s value in state
``s``), so each gate costs a handful of bignum operations regardless of
width.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import WidthOutOfRangeError
from .permutation import MAX_WIDTH, Permutation


class GateKind(str, enum.Enum):
    VTOF = "VTOF"
    FRED = "FRED"
    CKNOT = "CKNOT"
    CKSWAP = "CKSWAP"


PRIMITIVE_KINDS = frozenset({GateKind.VTOF, GateKind.FRED})


class LineRole(str, enum.Enum):
    DATA = "data"
    ANCILLA0 = "ancilla0"
    ANCILLA1 = "ancilla1"
    BORROWED = "borrowed"


class GateInstance(NamedTuple):
    """One gate: a kind plus its line tuple.

    Line tuple layout by kind: ``VTOF (control, invert, target)``;
    ``FRED (control, t1, t2)``; ``CKNOT (c1, ..., ck, target)``;
    ``CKSWAP (c1, ..., ck, t1, t2)``.
    """

    kind: GateKind
    lines: tuple[int, ...]

    @property
    def k(self) -> int:
        """Control count of a macro gate (VTOF and FRED report 1)."""
        if self.kind is GateKind.CKNOT:
            return len(self.lines) - 1
        if self.kind is GateKind.CKSWAP:
            return len(self.lines) - 2
        return 1

    @property
    def controls(self) -> tuple[int, ...]:
        if self.kind is GateKind.CKNOT:
            return self.lines[:-1]
        if self.kind is GateKind.CKSWAP:
            return self.lines[:-2]
        return self.lines[:1]

    @property
    def targets(self) -> tuple[int, ...]:
        if self.kind is GateKind.CKNOT:
            return self.lines[-1:]
        return self.lines[-2:]

    def validate(self) -> None:
        n = len(self.lines)
        if self.kind in (GateKind.VTOF, GateKind.FRED):
            if n != 3:
                raise ValueError(f"{self.kind.value} needs 3 lines, got {n}")
        elif self.kind is GateKind.CKNOT:
            if n < 1:
                raise ValueError("CKNOT needs at least a target line")
        elif n < 2:
            raise ValueError("CKSWAP needs at least two target lines")
        if len(set(self.lines)) != n:
            raise ValueError(f"gate lines must be distinct, got {self.lines}")
        if any(l < 1 for l in self.lines):
            raise ValueError(f"lines are 1-based, got {self.lines}")


def vtof(control: int, invert: int, target: int) -> GateInstance:
    g = GateInstance(GateKind.VTOF, (control, invert, target))
    g.validate()
    return g


def fred(control: int, t1: int, t2: int) -> GateInstance:
    g = GateInstance(GateKind.FRED, (control, t1, t2))
    g.validate()
    return g


def cknot(controls: Iterable[int], target: int) -> GateInstance:
    g = GateInstance(GateKind.CKNOT, (*controls, target))
    g.validate()
    return g


def ckswap(controls: Iterable[int], t1: int, t2: int) -> GateInstance:
    g = GateInstance(GateKind.CKSWAP, (*controls, t1, t2))
    g.validate()
    return g


def not_gate(target: int) -> GateInstance:
    return cknot((), target)


def cnot(control: int, target: int) -> GateInstance:
    return cknot((control,), target)


def swap(t1: int, t2: int) -> GateInstance:
    return ckswap((), t1, t2)


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list over ``width`` lines with per-line roles.

    Roles state the synthesis contract per line: ``data`` lines carry the
    permutation being realized; ``ancilla0``/``ancilla1`` lines are supplied
    at the stated constant and are restored to it; ``borrowed`` lines may
    start at either value and are restored to it.
    """

    width: int
    gates: tuple[GateInstance, ...]
    roles: tuple[LineRole, ...] = field(default=())

    def __post_init__(self) -> None:
        if not 1 <= self.width <= MAX_WIDTH:
            raise WidthOutOfRangeError(
                f"circuit width must be in [1, {MAX_WIDTH}], got {self.width}"
            )
        if not self.roles:
            object.__setattr__(
                self, "roles", tuple(LineRole.DATA for _ in range(self.width))
            )
        if len(self.roles) != self.width:
            raise ValueError(
                f"{self.width} lines need {self.width} roles, got {len(self.roles)}"
            )
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            g.validate()
            if max(g.lines) > self.width:
                raise ValueError(
                    f"gate {g.kind.value} {g.lines} exceeds width {self.width}"
                )

    def data_lines(self) -> tuple[int, ...]:
        return tuple(
            l for l in range(1, self.width + 1)
            if self.roles[l - 1] is LineRole.DATA
        )

    def lines_with_role(self, role: LineRole) -> tuple[int, ...]:
        return tuple(
            l for l in range(1, self.width + 1) if self.roles[l - 1] is role
        )

    def role_counts(self) -> dict[str, int]:
        counts = {r.value: 0 for r in LineRole}
        for r in self.roles:
            counts[r.value] += 1
        return counts

    def primitive_gate_count(self) -> int:
        return sum(1 for g in self.gates if g.kind in PRIMITIVE_KINDS)

    def is_primitive(self) -> bool:
        return all(g.kind in PRIMITIVE_KINDS for g in self.gates)


def bit_of(state: int, line: int, width: int) -> int:
    """Value of ``line`` in ``state`` (MSB-first)."""
    return (state >> (width - line)) & 1


def apply_gate(gate: GateInstance, state: int, width: int) -> int:
    """Reference single-state semantics of one gate."""
    kind = gate.kind
    if kind is GateKind.VTOF:
        c, i, t = gate.lines
        if bit_of(state, c, width) and bit_of(state, i, width):
            state ^= 1 << (width - t)
        return state ^ (1 << (width - i))
    if kind is GateKind.FRED:
        c, a, b = gate.lines
        if bit_of(state, c, width) and bit_of(state, a, width) != bit_of(state, b, width):
            state ^= (1 << (width - a)) | (1 << (width - b))
        return state
    if kind is GateKind.CKNOT:
        *cs, t = gate.lines
        if all(bit_of(state, c, width) for c in cs):
            state ^= 1 << (width - t)
        return state
    *cs, a, b = gate.lines
    if all(bit_of(state, c, width) for c in cs):
        if bit_of(state, a, width) != bit_of(state, b, width):
            state ^= (1 << (width - a)) | (1 << (width - b))
    return state


def simulate(circuit: Circuit, state: int) -> int:
    """Apply the whole gate list to one input state (reference path)."""
    for g in circuit.gates:
        state = apply_gate(g, state, circuit.width)
    return state


def initial_line_masks(width: int) -> list[int]:
    """Bitsliced initial values: ``masks[l]`` holds line ``l``'s value in
    every state (bit ``s`` = value in state ``s``); index 0 is unused."""
    size = 1 << width
    all_ones = (1 << size) - 1
    masks = [0] * (width + 1)
    for line in range(1, width + 1):
        period = 1 << (width - line)
        masks[line] = (all_ones // ((1 << period) + 1)) << period
    return masks


def apply_gates_bitsliced(
    gates: Iterable[GateInstance], masks: list[int], width: int
) -> list[int]:
    """Apply a gate list to bitsliced line masks in place (and return them)."""
    all_ones = (1 << (1 << width)) - 1
    for g in gates:
        kind = g.kind
        if kind is GateKind.VTOF:
            c, i, t = g.lines
            masks[t] ^= masks[c] & masks[i]
            masks[i] ^= all_ones
        elif kind is GateKind.FRED:
            c, a, b = g.lines
            d = masks[c] & (masks[a] ^ masks[b])
            masks[a] ^= d
            masks[b] ^= d
        elif kind is GateKind.CKNOT:
            *cs, t = g.lines
            prod = all_ones
            for c in cs:
                prod &= masks[c]
            masks[t] ^= prod
        else:
            *cs, a, b = g.lines
            prod = all_ones
            for c in cs:
                prod &= masks[c]
            d = prod & (masks[a] ^ masks[b])
            masks[a] ^= d
            masks[b] ^= d
    return masks


def final_line_masks(circuit: Circuit) -> list[int]:
    """Bitsliced output of the whole circuit on every state at once."""
    return apply_gates_bitsliced(
        circuit.gates, initial_line_masks(circuit.width), circuit.width
    )


def masks_to_mapping(masks: list[int], width: int) -> list[int]:
    """Read per-state output integers back out of bitsliced line masks."""
    size = 1 << width
    mapping = [0] * size
    for line in range(1, width + 1):
        m = masks[line]
        shift = width - line
        for s in range(size):
            mapping[s] |= ((m >> s) & 1) << shift
    return mapping


def circuit_to_permutation(circuit: Circuit) -> Permutation:
    """The permutation the circuit induces on all ``2**width`` states.

    Roles are ignored here: this is the raw action on the full state space.
    """
    return Permutation(
        circuit.width, masks_to_mapping(final_line_masks(circuit), circuit.width)
    )
