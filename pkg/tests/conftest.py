"""Shared oracle builders for the test suite.

Each oracle constructs the expected permutation directly from bit
arithmetic, independently of the synthesis code under test.
"""

from __future__ import annotations

import random

from revsynth.circuit import Circuit, GateInstance, GateKind
from revsynth.permutation import Permutation


def cknot_permutation(
    width: int, controls: tuple[int, ...], target: int
) -> Permutation:
    """Oracle: flip ``target`` iff every control line is 1 (MSB-first)."""
    mapping = []
    for x in range(1 << width):
        if all((x >> (width - c)) & 1 for c in controls):
            x ^= 1 << (width - target)
        mapping.append(x)
    return Permutation(width, mapping)


def ckswap_permutation(
    width: int, controls: tuple[int, ...], t1: int, t2: int
) -> Permutation:
    """Oracle: swap lines ``t1``/``t2`` iff every control line is 1."""
    mapping = []
    for x in range(1 << width):
        if all((x >> (width - c)) & 1 for c in controls):
            a = (x >> (width - t1)) & 1
            b = (x >> (width - t2)) & 1
            if a != b:
                x ^= (1 << (width - t1)) | (1 << (width - t2))
        mapping.append(x)
    return Permutation(width, mapping)


def random_primitive_circuit(
    width: int, n_gates: int, rng: random.Random
) -> Circuit:
    """A random mix of VTOF and FRED gates, for simulator cross-checks."""
    gates = []
    for _ in range(n_gates):
        lines = tuple(rng.sample(range(1, width + 1), 3))
        kind = rng.choice((GateKind.VTOF, GateKind.FRED))
        gates.append(GateInstance(kind, lines))
    return Circuit(width, tuple(gates))
