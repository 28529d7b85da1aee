"""Compile a two-letter recognizer into a base-2 automaton with output.

The compiled machine reads the binary numeral of n (most significant digit
first, leading zeros allowed) and outputs the n-th bit of the recognizer's
characteristic sequence under shortlex order.  The construction tracks, in
each state, the pair of recognizer states reached on the current shortlex
word and on its predecessor: appending the digit 1 to the numeral of n
yields 2n+1, whose word extends word(n) by the first letter, while the
digit 0 yields 2n, whose word extends word(n-1) by the second letter.  A
separate start state absorbs leading zeros.

The module also goes the other way around the construction: ``split_dfa``
separates the numerals of the 1-positions from those of the 0-positions,
and ``glue`` reassembles an output machine from two such recognizers.
"""

from __future__ import annotations

from .automata import (
    Dfa,
    Dfao,
    _explore,
    difference,
    intersection,
    minimize,
    minimize_dfao,
    shortest_accepted,
    union,
)
from .charseq import char_seq, output_seq

# Raw compiled state meaning "nothing but zeros read so far" (index 0).
_ZERO = None


def _require_ab(dfa: Dfa):
    if tuple(dfa.alphabet) != ("a", "b"):
        raise ValueError(
            f"the compiler expects the alphabet 'a b' in that order, got {' '.join(dfa.alphabet)!r}"
        )


def compile_dfa_with_pairs(dfa: Dfa) -> tuple[Dfao, dict[str, tuple[str, str] | None]]:
    """Unminimized compilation, keeping the bookkeeping visible.

    Returns the compiled machine plus a map from each of its state names to
    the tracked pair (state on word(n), state on word(n-1)), or None for
    the leading-zeros state.  At most |Q|**2 + 1 states are created.
    """
    _require_ab(dfa)
    first, second = dfa.alphabet
    delta = dfa.transitions
    start = dfa.initial

    def step(raw, digit):
        if raw is _ZERO:
            # Reading 1 moves from index 0 to index 1: word "a", predecessor "".
            return _ZERO if digit == "0" else (delta[start, first], start)
        on_n, on_prev = raw
        if digit == "1":
            return (delta[on_n, first], delta[on_prev, second])
        return (delta[on_prev, second], delta[on_prev, first])

    order, names, transitions = _explore(_ZERO, ("0", "1"), step)
    accepting = dfa.accepting
    outputs = {}
    for raw in order:
        tracked = start if raw is _ZERO else raw[0]
        outputs[names[raw]] = "1" if tracked in accepting else "0"
    compiled = Dfao(
        alphabet=("0", "1"),
        states=tuple(names[raw] for raw in order),
        initial=names[_ZERO],
        transitions=transitions,
        outputs=outputs,
    )
    return compiled, {names[raw]: raw for raw in order}


def compile_dfa(dfa: Dfa, minimize: bool = True) -> Dfao:
    """Base-2 output machine computing the characteristic sequence of L(dfa)."""
    compiled, _ = compile_dfa_with_pairs(dfa)
    return minimize_dfao(compiled) if minimize else compiled


def canonical_recognizer() -> Dfa:
    """DFA over the digits 0, 1 accepting exactly the canonical numerals:
    the empty word and every word starting with 1."""
    return Dfa(
        alphabet=("0", "1"),
        states=("start", "one", "junk"),
        initial="start",
        accepting=frozenset({"start", "one"}),
        transitions={
            ("start", "0"): "junk",
            ("start", "1"): "one",
            ("one", "0"): "one",
            ("one", "1"): "one",
            ("junk", "0"): "junk",
            ("junk", "1"): "junk",
        },
    )


def _filter_by_output(compiled: Dfao, letter: str) -> Dfa:
    canon = canonical_recognizer()

    def step(pair, digit):
        return (compiled.transitions[pair[0], digit], canon.transitions[pair[1], digit])

    startpair = (compiled.initial, canon.initial)
    order, names, transitions = _explore(startpair, compiled.alphabet, step)
    accepting = frozenset(
        names[p]
        for p in order
        if compiled.outputs[p[0]] == letter and p[1] in canon.accepting
    )
    return Dfa(
        alphabet=compiled.alphabet,
        states=tuple(names[p] for p in order),
        initial=names[startpair],
        accepting=accepting,
        transitions=transitions,
    )


def split_dfa(dfa: Dfa) -> tuple[Dfa, Dfa]:
    """Minimal recognizers for the canonical numerals of the 1-positions and
    the 0-positions of the characteristic sequence of L(dfa)."""
    compiled = compile_dfa(dfa)
    ones = minimize(_filter_by_output(compiled, "1"))
    zeros = minimize(_filter_by_output(compiled, "0"))
    return ones, zeros


class PartitionError(ValueError):
    """The two languages handed to :func:`glue` do not split the canonical
    numerals: they overlap, miss one, or contain a non-canonical word.
    ``witness`` is a shortest offending word."""

    _DETAILS = {
        "overlap": "both languages contain",
        "uncovered": "neither language contains the canonical numeral",
        "noncanonical": "a non-canonical word is included:",
    }

    def __init__(self, reason: str, witness: str):
        self.reason = reason
        self.witness = witness
        shown = witness if witness else "the empty word"
        super().__init__(f"not a partition of the canonical numerals: {self._DETAILS[reason]} {shown!r}")


def glue(ones: Dfa, zeros: Dfa) -> Dfao:
    """Reassemble an output machine from the recognizers of the 1-positions
    and the 0-positions.

    Both inputs must read the digits 0, 1 and their languages must split
    the canonical numerals exactly; otherwise :class:`PartitionError`
    reports a shortest witness.  The product of the two recognizers gets
    its initial 0-transition redirected into a self-loop so that leading
    zeros leave the machine in place, then each reachable product state is
    labeled by which side accepts there.
    """
    for machine in (ones, zeros):
        if tuple(machine.alphabet) != ("0", "1"):
            raise ValueError(
                f"glue expects machines over the digits '0 1', got {' '.join(machine.alphabet)!r}"
            )

    witness = shortest_accepted(intersection(ones, zeros))
    if witness is not None:
        raise PartitionError("overlap", witness)
    both = union(ones, zeros)
    witness = shortest_accepted(difference(canonical_recognizer(), both))
    if witness is not None:
        raise PartitionError("uncovered", witness)
    witness = shortest_accepted(difference(both, canonical_recognizer()))
    if witness is not None:
        raise PartitionError("noncanonical", witness)

    startpair = (ones.initial, zeros.initial)

    def step(pair, digit):
        if pair == startpair and digit == "0":
            return startpair
        return (ones.transitions[pair[0], digit], zeros.transitions[pair[1], digit])

    order, names, transitions = _explore(startpair, ("0", "1"), step)
    outputs = {}
    for pair in order:
        in_ones = pair[0] in ones.accepting
        in_zeros = pair[1] in zeros.accepting
        if in_ones == in_zeros:
            # The partition checks above rule this out for reachable states.
            raise RuntimeError(
                f"product state {pair!r} is claimed by {'both sides' if in_ones else 'neither side'}"
            )
        outputs[names[pair]] = "1" if in_ones else "0"
    glued = Dfao(
        alphabet=("0", "1"),
        states=tuple(names[p] for p in order),
        initial=names[startpair],
        transitions=transitions,
        outputs=outputs,
    )
    return minimize_dfao(glued)


def first_mismatch(dfa: Dfa, count: int) -> int | None:
    """Index of the first disagreement between the compiled machine and the
    word-by-word characteristic sequence, or None if the first ``count``
    entries agree."""
    compiled = compile_dfa(dfa)
    got = output_seq(compiled, count)
    want = char_seq(dfa, count)
    for n, (bit, expected) in enumerate(zip(got, want)):
        if int(bit) != expected:
            return n
    return None
