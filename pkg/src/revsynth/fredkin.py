"""FRED-alphabet synthesis: conservative permutations over Fredkin gates.

A conservative (weight-preserving) permutation is built class by class:
within each Hamming-weight class, any permutation is a product of
transpositions, each transposition is a chain of controlled swaps along a
Hamming path, and each multi-controlled swap lowers to plain Fredkin gates
against one extra line. The controlled-swap lowering is the heart of the
module: a recursive construction whose inner levels borrow their enclosing
gate's target pair as scratch space, so a single extra line serves any
control count.
"""

from __future__ import annotations

from .circuit import Circuit, GateInstance, LineRole, apply_gate, ckswap, fred
from .errors import (
    DepthLimitError,
    EqualStringsError,
    RangeError,
    WeightMismatchError,
    WidthOutOfRangeError,
)
from .permutation import Permutation
from .weights import bits, strings_of_weight, weight_decompose

CKSWAP_MAX_CONTROLS = 8
CONSERVATIVE_MIN_WIDTH = 3
CONSERVATIVE_MAX_WIDTH = 12


def _check_weight_strings(s1: str, s2: str) -> None:
    for s in (s1, s2):
        if s.strip("01"):
            raise ValueError(f"weight strings are binary, got {s!r}")
    if len(s1) != len(s2):
        raise WeightMismatchError(
            f"strings differ in length: {len(s1)} vs {len(s2)}"
        )
    if s1.count("1") != s2.count("1"):
        raise WeightMismatchError(
            f"strings differ in weight: {s1} has {s1.count('1')} ones, "
            f"{s2} has {s2.count('1')}"
        )


def hamming_path(s1: str, s2: str) -> list[str]:
    """Deterministic path from ``s1`` to ``s2`` through equal-weight
    strings, adjacent entries at Hamming distance exactly 2.

    Mismatched one-positions are relocated in ascending index order, one
    per step: the i-th surplus 1 of ``s1`` moves to the i-th missing
    position.
    """
    _check_weight_strings(s1, s2)
    surplus = [i for i, (a, b) in enumerate(zip(s1, s2)) if a == "1" and b == "0"]
    missing = [i for i, (a, b) in enumerate(zip(s1, s2)) if a == "0" and b == "1"]
    path = [s1]
    cur = list(s1)
    for src, dst in zip(surplus, missing):
        cur[src] = "0"
        cur[dst] = "1"
        path.append("".join(cur))
    return path


def _adjacent_swap_gate(u: str, v: str) -> GateInstance:
    """CKSWAP exchanging the distance-2 pair ``u``/``v`` within their
    weight class: controls on the common one-positions, targets on the two
    differing positions (string index i is line i + 1)."""
    controls = tuple(
        i + 1 for i, (a, b) in enumerate(zip(u, v)) if a == b == "1"
    )
    diff = tuple(i + 1 for i, (a, b) in enumerate(zip(u, v)) if a != b)
    return ckswap(controls, diff[0], diff[1])


def synth_transposition(s1: str, s2: str, m: int) -> tuple[GateInstance, ...]:
    """Macro fragment whose induced action on the weight class of
    ``s1``/``s2`` is exactly the transposition (s1 s2).

    Forward phase shifts ``s1`` along the Hamming path to ``s2``; the
    return phase replays all but the last gate in reverse to shift the
    displaced ``s2`` back. Each gate controls on the k-1 common
    one-positions of an adjacent pair, so classes below weight k are never
    touched; classes above k may move (callers correct for that stage by
    stage).
    """
    if len(s1) != m or len(s2) != m:
        raise WeightMismatchError(
            f"strings must have length {m}, got {len(s1)} and {len(s2)}"
        )
    if s1 == s2:
        raise EqualStringsError(f"cannot transpose {s1} with itself")
    _check_weight_strings(s1, s2)
    path = hamming_path(s1, s2)
    forward = [_adjacent_swap_gate(path[i - 1], path[i]) for i in range(1, len(path))]
    return tuple(forward) + tuple(reversed(forward[:-1]))


def synth_ckswap_ancilla(
    k: int, lines: tuple[int, ...], ancilla_line: int
) -> tuple[GateInstance, ...]:
    """Macro fragment swapping the two targets iff all ``k`` controls are
    1, against an ancilla line starting at 0 (restored).

    ``lines`` is k controls then the two targets. Structure: a
    C^(k-1)SWAP copies the product of the first k-1 controls and the k-th
    control onto the ancilla, a CSWAP from the ancilla moves the targets,
    and the C^(k-1)SWAP restores.
    """
    if k < 1:
        raise RangeError(f"ancilla construction needs k >= 1, got {k}")
    if len(lines) != k + 2:
        raise RangeError(f"expected {k + 2} lines for k={k}, got {len(lines)}")
    controls = lines[:k]
    t1, t2 = lines[k:]
    child = ckswap(controls[:-1], controls[-1], ancilla_line)
    return (child, ckswap((ancilla_line,), t1, t2), child)


def synth_ckswap_borrowed_pair(
    k: int, lines: tuple[int, ...], pair: tuple[int, int]
) -> tuple[GateInstance, ...]:
    """Macro fragment swapping the two targets iff all ``k`` controls are
    1, using a borrowed pair of lines assumed to hold opposite values.

    When the pair starts equal the whole fragment acts as the identity on
    every line; when opposite, it is exact and restores pair and controls.
    Either orientation of the pair works. The cascade runs twice, once
    routed through each pair line, so the halves compensate whenever the
    opposite-value assumption fails.

    Only defined for ``k >= 2``: the compensation needs a spare control to
    condition on, and the k=1 case is a bare Fredkin gate anyway.
    """
    if k < 2:
        raise RangeError(
            f"borrowed-pair construction needs k >= 2, got {k}"
        )
    if len(lines) != k + 2:
        raise RangeError(f"expected {k + 2} lines for k={k}, got {len(lines)}")
    controls = lines[:k]
    t1, t2 = lines[k:]
    x, y = pair
    if len({x, y} | set(lines)) != k + 4:
        raise RangeError(
            f"pair {pair} must be two fresh lines outside {lines}"
        )
    steer_x = ckswap((x,), controls[0], y)
    steer_y = ckswap((y,), controls[0], x)
    child_x = ckswap(controls[:-1], controls[-1], x)
    child_y = ckswap(controls[:-1], controls[-1], y)
    move = ckswap((controls[-1],), t1, t2)
    return (
        steer_x, child_x, move, child_x, steer_x,
        steer_y, child_y, move, child_y, steer_y,
    )


def _merged_ckswap(
    controls: tuple[int, ...],
    targets: tuple[int, int],
    pair: tuple[int, int],
) -> list[GateInstance]:
    """FRED lowering of the borrowed-pair controlled swap.

    Exact C^kSWAP when the pair lines hold opposite values (controls and
    pair restored); identity on every line when they hold equal values.
    Children recurse with the enclosing gate's target pair as their own
    borrowed pair, which is what keeps the line budget flat.
    """
    if len(controls) == 1:
        return [fred(controls[0], targets[0], targets[1])]
    x, y = pair
    t1, t2 = targets
    steer_x = fred(x, controls[0], y)
    steer_y = fred(y, controls[0], x)
    child_x = _merged_ckswap(controls[:-1], (controls[-1], x), (t1, t2))
    child_y = _merged_ckswap(controls[:-1], (controls[-1], y), (t1, t2))
    move = fred(controls[-1], t1, t2)
    return (
        [steer_x] + child_x + [move] + child_x + [steer_x]
        + [steer_y] + child_y + [move] + child_y + [steer_y]
    )


def ckswap_fred_with_ancilla(
    controls: tuple[int, ...],
    targets: tuple[int, int],
    ancilla_line: int,
    ancilla_value: int,
) -> tuple[GateInstance, ...]:
    """Lower a multi-controlled swap to FRED gates against one ancilla
    line whose starting value is known.

    Exact on the subspace where the ancilla holds ``ancilla_value``
    (restored there). The 0-valued route conjugates a CSWAP-from-ancilla
    by a borrowed-pair C^(k-1)SWAP that parks the last control's product
    on the ancilla. The 1-valued route cannot park a product on the
    ancilla (no zero to write into), so it fires the target swap an
    adjusted number of times: each level contributes two conditional
    swaps that cancel unless the remaining controls are all 1, plus a
    recursive tail one control shorter.
    """
    k = len(controls)
    if k == 1:
        return (fred(controls[0], targets[0], targets[1]),)
    if ancilla_value == 0:
        if k == 0:
            raise RangeError(
                "an unconditional swap cannot be driven by a 0-valued ancilla"
            )
        child = _merged_ckswap(controls[:-1], (controls[-1], ancilla_line), targets)
        mid = fred(ancilla_line, targets[0], targets[1])
        return tuple(child) + (mid,) + tuple(child)
    if k == 0:
        return (fred(ancilla_line, targets[0], targets[1]),)
    child = _merged_ckswap(controls[:-1], (controls[-1], ancilla_line), targets)
    flip = fred(ancilla_line, targets[0], targets[1])
    tail = ckswap_fred_with_ancilla(
        controls[:-1], targets, ancilla_line, ancilla_value
    )
    return tuple(child) + (flip,) + tuple(child) + (flip,) + tail


def synth_ckswap(k: int) -> Circuit:
    """Primitive FRED circuit for the C^kSWAP on k+3 lines: k controls,
    two targets, one ancilla fixed at 0 (k=1 is a single Fredkin gate on
    3 lines, no ancilla).

    The ancilla construction is used only at the top level; every level
    below runs the borrowed-pair construction, borrowing its enclosing
    gate's target pair.
    """
    if k < 1:
        raise RangeError(f"control count must be at least 1, got {k}")
    if k > CKSWAP_MAX_CONTROLS:
        raise DepthLimitError(
            f"control count capped at {CKSWAP_MAX_CONTROLS}, got {k}"
        )
    if k == 1:
        return Circuit(3, (fred(1, 2, 3),))
    controls = tuple(range(1, k + 1))
    targets = (k + 1, k + 2)
    ancilla = k + 3
    gates = ckswap_fred_with_ancilla(controls, targets, ancilla, 0)
    roles = (LineRole.DATA,) * (k + 2) + (LineRole.ANCILLA0,)
    return Circuit(k + 3, gates, roles=roles)


def _index_transpositions(mapping: list[int]) -> list[tuple[int, int]]:
    """Transpositions composing (left to right) to the index permutation
    ``mapping``; cycles split smallest-element-first."""
    seen = [False] * len(mapping)
    out: list[tuple[int, int]] = []
    for start in range(len(mapping)):
        if seen[start] or mapping[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        nxt = mapping[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = mapping[nxt]
        out.extend((cycle[0], c) for c in cycle[1:])
    return out


def conservative_stage_plan(
    p: Permutation,
) -> list[tuple[int, tuple[GateInstance, ...]]]:
    """Macro gate plan for a conservative permutation, one entry per
    weight class in ascending order.

    Stage k synthesizes the correction on the weight-k class: the target's
    class action composed with the inverse of whatever earlier stages
    already did to that class (their gates spill into higher classes).
    Because stage-k gates never touch classes below k, each stage locks in
    all classes up to its own weight.
    """
    n = p.width
    decomp = weight_decompose(p)
    image = list(range(1 << n))
    plan: list[tuple[int, tuple[GateInstance, ...]]] = []
    for k in range(1, n):
        states = strings_of_weight(n, k)
        index_of = {s: i for i, s in enumerate(states)}
        residual = [index_of[image[s]] for s in states]
        inverse = [0] * len(states)
        for i, img in enumerate(residual):
            inverse[img] = i
        target_index = decomp.classes[k]
        correction = [target_index[inverse[i]] for i in range(len(states))]
        stage: list[GateInstance] = []
        for ia, ib in _index_transpositions(correction):
            stage.extend(
                synth_transposition(bits(states[ia], n), bits(states[ib], n), n)
            )
        for s in range(1 << n):
            v = image[s]
            for g in stage:
                v = apply_gate(g, v, n)
            image[s] = v
        plan.append((k, tuple(stage)))
    return plan


def synth_conservative(p: Permutation) -> Circuit:
    """Compile a conservative permutation to a FRED netlist on
    ``width + 1`` lines, the last line a single ancilla.

    The ancilla is declared at 0 whenever the target fixes every weight-1
    string (then no gate ever needs to move a lone 1, and the 0-routed
    swap lowering applies throughout). Otherwise it is declared at 1: a
    weight-1 data state plus a 0 ancilla has global weight 1, and no
    Fredkin circuit moves such a state at all, so those targets are only
    reachable against a 1-valued ancilla.
    """
    n = p.width
    if not CONSERVATIVE_MIN_WIDTH <= n <= CONSERVATIVE_MAX_WIDTH:
        raise WidthOutOfRangeError(
            f"conservative synthesis supports widths "
            f"{CONSERVATIVE_MIN_WIDTH}..{CONSERVATIVE_MAX_WIDTH}, got {n}"
        )
    plan = conservative_stage_plan(p)
    gates: list[GateInstance] = []
    for _, stage in plan:
        gates.extend(stage)
    decomp = weight_decompose(p)
    class_one_fixed = decomp.is_identity(1)
    role = LineRole.ANCILLA0 if class_one_fixed else LineRole.ANCILLA1
    macro = Circuit(
        n + 1, tuple(gates), roles=(LineRole.DATA,) * n + (role,)
    )
    from .expand import expand_macros

    return expand_macros(macro, "FRED")
