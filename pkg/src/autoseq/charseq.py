"""Characteristic sequences of regular languages under shortlex order.

For a language L over a two-letter alphabet, entry n of the characteristic
sequence is 1 exactly when the n-th word in shortlex order belongs to L.
Everything here evaluates that definition directly on a recognizer, one
word at a time; it is the slow, obviously-correct reference against which
the compiled machines are checked.
"""

from __future__ import annotations

from typing import NamedTuple

from .automata import Dfa, Dfao, accepts, minimize, output
from .numeration import _DIGITS, shortlex_word, to_digits


def char_bit(dfa: Dfa, word: str) -> int:
    """1 if the recognizer accepts ``word``, else 0."""
    return 1 if accepts(dfa, word) else 0


def char_seq(dfa: Dfa, count: int) -> list[int]:
    """First ``count`` entries of the characteristic sequence of L(dfa).

    Each entry is recomputed from its shortlex word, so memory stays
    logarithmic in the index no matter how far the sequence is taken.
    """
    if len(dfa.alphabet) != 2:
        raise ValueError(
            f"characteristic sequences need a two-letter alphabet, got {' '.join(dfa.alphabet)!r}"
        )
    if not isinstance(count, int) or count < 0:
        raise ValueError(f"count must be a non-negative integer, got {count!r}")
    alphabet = dfa.alphabet
    return [char_bit(dfa, shortlex_word(n, alphabet)) for n in range(count)]


def output_seq(dfao: Dfao, count: int) -> list[str]:
    """First ``count`` outputs of a digit-reading machine: entry n is the
    output after reading the canonical numeral of n (most significant digit
    first, empty numeral for 0)."""
    base = len(dfao.alphabet)
    if tuple(dfao.alphabet) != tuple(_DIGITS[:base]) or base < 2:
        raise ValueError(
            f"need the digit alphabet 0..{base - 1 if base >= 2 else 1} in order, "
            f"got {' '.join(dfao.alphabet)!r}"
        )
    if not isinstance(count, int) or count < 0:
        raise ValueError(f"count must be a non-negative integer, got {count!r}")
    return [output(dfao, to_digits(n, base)) for n in range(count)]


class Residual(NamedTuple):
    """A distinct left quotient of the language, named by its shortest
    witness prefix and the minimal-DFA state that recognizes it."""

    witness: str
    state: str


def residuals(dfa: Dfa) -> list[Residual]:
    """One entry per distinct residual language of L(dfa).

    The recognizer is minimized first, so two prefixes that admit exactly
    the same continuations are counted once.  Entries come back in
    breadth-first order; the first witness is always the empty word.
    """
    small = minimize(dfa)
    witness = {small.initial: ""}
    order = [small.initial]
    for state in order:
        for letter in small.alphabet:
            nxt = small.transitions[state, letter]
            if nxt not in witness:
                witness[nxt] = witness[state] + letter
                order.append(nxt)
    return [Residual(witness[state], state) for state in order]


def residual_bit(dfa: Dfa, prefix: str, word: str) -> int:
    """1 if ``word`` belongs to the residual of L(dfa) by ``prefix``, i.e.
    if the recognizer accepts ``prefix + word``."""
    return char_bit(dfa, prefix + word)
