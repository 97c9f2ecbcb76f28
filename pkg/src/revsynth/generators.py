"""Decomposition of permutations over two generator transforms.

The full symmetric group on ``0 .. 2**n - 1`` is generated by two
permutations, in either of two variants:

* standard: ``T1`` swaps states 0 and 1; ``T2`` maps every state ``x`` to
  ``(x + 1) mod 2**n``.
* primed: ``T1'`` swaps the two largest states ``2**n - 2`` and ``2**n - 1``;
  ``T2'`` is the same +1 shift as ``T2``.

``decompose_generators`` emits the literal textbook recipe with no
cancellation: transpositions, then adjacent swaps, then for each adjacent
swap a shift-conjugated generator pair. Every adjacent swap costs exactly
one ``T1`` (or ``T1'``) and ``2**n`` shifts, so an even permutation always
yields even counts of both primed tokens.
"""

from __future__ import annotations

import enum

from .permutation import Permutation

_VARIANTS = ("standard", "primed")


class TransformToken(str, enum.Enum):
    T1 = "T1"
    T2 = "T2"
    T1P = "T1'"
    T2P = "T2'"


def token_permutation(token: TransformToken, width: int) -> Permutation:
    """The permutation a single token denotes at the given width."""
    size = 1 << width
    if token in (TransformToken.T2, TransformToken.T2P):
        return Permutation(width, tuple((x + 1) % size for x in range(size)))
    lo = 0 if token is TransformToken.T1 else size - 2
    mapping = list(range(size))
    mapping[lo], mapping[lo + 1] = mapping[lo + 1], mapping[lo]
    return Permutation(width, mapping)


def compose_tokens(tokens: list[TransformToken], width: int) -> Permutation:
    """Apply a token list in order (first token first)."""
    p = Permutation.identity(width)
    for t in tokens:
        p = p.then(token_permutation(t, width))
    return p


def adjacent_swap_tokens(a: int, width: int, variant: str = "standard") -> list[TransformToken]:
    """Tokens realizing the adjacent transposition ``(a, a+1)``.

    Standard variant: shift ``(a, a+1)`` onto ``(0, 1)`` with ``2**n - a``
    ``T2`` steps, swap, shift back with ``a`` steps. Primed variant: shift
    onto the top pair instead. Emitted literally, including full-cycle
    shift runs.
    """
    size = 1 << width
    if not 0 <= a <= size - 2:
        raise ValueError(f"adjacent swap start must be in [0, {size - 2}], got {a}")
    if variant not in _VARIANTS:
        raise ValueError(f"variant must be one of {_VARIANTS}, got {variant!r}")
    if variant == "standard":
        shift, swap_tok = TransformToken.T2, TransformToken.T1
        lead = size - a
    else:
        shift, swap_tok = TransformToken.T2P, TransformToken.T1P
        lead = size - 2 - a
    return [shift] * lead + [swap_tok] + [shift] * (size - lead)


def transposition_tokens(i: int, j: int, width: int, variant: str = "standard") -> list[TransformToken]:
    """Tokens realizing the transposition ``(i, j)``, ``i < j``.

    The moving element bubbles up through ``j - i`` adjacent swaps, then the
    displaced elements bubble back through ``j - i - 1`` more: an odd count,
    matching the odd parity of a transposition.
    """
    if not 0 <= i < j < (1 << width):
        raise ValueError(f"need 0 <= i < j < 2**width, got ({i}, {j})")
    out: list[TransformToken] = []
    for a in range(i, j):
        out.extend(adjacent_swap_tokens(a, width, variant))
    for a in range(j - 2, i - 1, -1):
        out.extend(adjacent_swap_tokens(a, width, variant))
    return out


def decompose_generators(p: Permutation, variant: str = "standard") -> list[TransformToken]:
    """Decompose a permutation into a generator-token sequence.

    Composing the returned tokens in list order reproduces ``p`` exactly.
    The identity yields an empty list.
    """
    if variant not in _VARIANTS:
        raise ValueError(f"variant must be one of {_VARIANTS}, got {variant!r}")
    out: list[TransformToken] = []
    for i, j in p.to_transpositions():
        out.extend(transposition_tokens(i, j, p.width, variant))
    return out
