"""Complete deterministic finite automata, with and without per-state output.

Machines are frozen dataclasses over string state ids and single-character
letters.  Construction validates the whole structure once (including totality
of the transition and output maps); after that every operation in this module
is a pure function returning fresh machines, so values can be shared freely.

Equivalence checks are exact: they walk the product automaton and either
prove the machines equal or return a shortest word witnessing the difference.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from typing import Callable, Hashable, Mapping


class InvalidAutomatonError(ValueError):
    """Structural validation failed; ``problems`` lists every violation."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic finite automaton.

    ``transitions`` must map every ``(state, letter)`` pair to a state;
    partial maps are rejected outright rather than patched with an implicit
    dead state.
    """

    alphabet: tuple[str, ...]
    states: tuple[str, ...]
    initial: str
    accepting: frozenset[str]
    transitions: Mapping[tuple[str, str], str]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "transitions", dict(self.transitions))
        problems = validate(self)
        if problems:
            raise InvalidAutomatonError(problems)


@dataclass(frozen=True)
class Dfao:
    """Complete deterministic automaton with an output letter per state.

    The word ``w`` is mapped to ``outputs[run(self, w)]``; acceptance plays
    no role.
    """

    alphabet: tuple[str, ...]
    states: tuple[str, ...]
    initial: str
    transitions: Mapping[tuple[str, str], str]
    outputs: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "transitions", dict(self.transitions))
        object.__setattr__(self, "outputs", dict(self.outputs))
        problems = validate(self)
        if problems:
            raise InvalidAutomatonError(problems)

    @property
    def output_letters(self) -> tuple[str, ...]:
        """Distinct output letters, sorted."""
        return tuple(sorted(set(self.outputs.values())))


Machine = Dfa | Dfao


def _token_problem(kind: str, value) -> str | None:
    if (
        not isinstance(value, str)
        or not value
        or len(value.split()) != 1
        or value != value.strip()
        or "#" in value
        or "=" in value
    ):
        return f"{kind} {value!r} must be a nonempty token without whitespace, '#' or '='"
    return None


def validate(machine: Machine) -> list[str]:
    """Every structural problem with the machine (empty list when sound)."""
    problems = []
    alphabet = tuple(machine.alphabet)
    states = tuple(machine.states)

    if not alphabet:
        problems.append("alphabet is empty")
    seen = set()
    for letter in alphabet:
        if not isinstance(letter, str) or len(letter) != 1 or letter.isspace() or letter in "#=":
            problems.append(f"alphabet letter {letter!r} must be a single plain character")
        elif letter in seen:
            problems.append(f"duplicate alphabet letter {letter!r}")
        seen.add(letter)

    if not states:
        problems.append("no states declared")
    seen = set()
    for state in states:
        bad = _token_problem("state id", state)
        if bad:
            problems.append(bad)
        elif state in seen:
            problems.append(f"duplicate state id {state!r}")
        seen.add(state)

    declared = set(states)
    letters = set(alphabet)
    if machine.initial not in declared:
        problems.append(f"initial state {machine.initial!r} is not declared")

    accepting = getattr(machine, "accepting", None)
    if accepting is not None:
        for state in sorted(accepting):
            if state not in declared:
                problems.append(f"accepting state {state!r} is not declared")

    for (state, letter), target in sorted(machine.transitions.items()):
        if state not in declared:
            problems.append(f"transition from undeclared state {state!r}")
        elif letter not in letters:
            problems.append(f"transition on unknown letter {letter!r} from state {state!r}")
        if target not in declared:
            problems.append(f"transition target {target!r} is not declared (from {state!r} on {letter!r})")
    for state in states:
        for letter in alphabet:
            if (state, letter) not in machine.transitions:
                problems.append(f"missing transition ({state!r}, {letter!r})")

    outputs = getattr(machine, "outputs", None)
    if outputs is not None:
        for state, letter in sorted(outputs.items()):
            if state not in declared:
                problems.append(f"output for undeclared state {state!r}")
            bad = _token_problem("output letter", letter)
            if bad:
                problems.append(bad)
        for state in states:
            if state not in outputs:
                problems.append(f"no output letter for state {state!r}")

    return problems


def run(machine: Machine, word: str) -> str:
    """State reached from the initial state after reading ``word``."""
    state = machine.initial
    delta = machine.transitions
    try:
        for letter in word:
            state = delta[state, letter]
    except KeyError:
        raise ValueError(
            f"letter {letter!r} is not in the alphabet {' '.join(machine.alphabet)!r}"
        ) from None
    return state


def accepts(dfa: Dfa, word: str) -> bool:
    return run(dfa, word) in dfa.accepting


def output(dfao: Dfao, word: str) -> str:
    return dfao.outputs[run(dfao, word)]


def reachable_states(machine: Machine) -> list[str]:
    """States reachable from the initial state, in breadth-first order."""
    seen = {machine.initial}
    order = [machine.initial]
    for state in order:
        for letter in machine.alphabet:
            nxt = machine.transitions[state, letter]
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
    return order


def _explore(start: Hashable, alphabet, step, prefix: str = "q"):
    """Materialize the machine reachable from ``start`` under ``step``.

    States are renamed ``q0, q1, ...`` in breadth-first discovery order
    (letters tried in alphabet order), which makes every construction built
    on this helper deterministic.  Returns the raw states in discovery
    order, the raw-to-name map, and the transition map over new names.
    """
    names = {start: f"{prefix}0"}
    order = [start]
    transitions = {}
    for raw in order:
        for letter in alphabet:
            nxt = step(raw, letter)
            if nxt not in names:
                names[nxt] = f"{prefix}{len(names)}"
                order.append(nxt)
            transitions[names[raw], letter] = names[nxt]
    return order, names, transitions


def _index_by(order, key: Callable) -> dict:
    ids: dict = {}
    out = {}
    for item in order:
        k = key(item)
        if k not in ids:
            ids[k] = len(ids)
        out[item] = ids[k]
    return out


def _moore(machine: Machine, seed: Callable[[str], Hashable]):
    """Coarsest congruence on the reachable states refining the seed key.

    Classic partition refinement: split by the seed, then repeatedly split
    by successor classes until stable.  Returns (class id per state,
    representative state per class id).
    """
    order = reachable_states(machine)
    alphabet = machine.alphabet
    delta = machine.transitions
    classes = _index_by(order, seed)
    while True:
        refined = _index_by(
            order, lambda s: (classes[s], *(classes[delta[s, a]] for a in alphabet))
        )
        stable = len(set(refined.values())) == len(set(classes.values()))
        classes = refined
        if stable:
            break
    reps = {}
    for state in order:
        reps.setdefault(classes[state], state)
    return classes, reps


def minimize(dfa: Dfa) -> Dfa:
    """Language-equivalent DFA with no unreachable and no equivalent states.

    The result is canonical for the language up to naming, and the names
    themselves are fixed by breadth-first discovery order, so equal inputs
    always produce byte-identical results.
    """
    classes, reps = _moore(dfa, lambda s: s in dfa.accepting)

    def step(cls, letter):
        return classes[dfa.transitions[reps[cls], letter]]

    order, names, transitions = _explore(classes[dfa.initial], dfa.alphabet, step)
    return Dfa(
        alphabet=dfa.alphabet,
        states=tuple(names[c] for c in order),
        initial=names[classes[dfa.initial]],
        accepting=frozenset(names[c] for c in order if reps[c] in dfa.accepting),
        transitions=transitions,
    )


def minimize_dfao(dfao: Dfao) -> Dfao:
    """Like :func:`minimize`, but states are split by output letter instead
    of acceptance."""
    classes, reps = _moore(dfao, lambda s: dfao.outputs[s])

    def step(cls, letter):
        return classes[dfao.transitions[reps[cls], letter]]

    order, names, transitions = _explore(classes[dfao.initial], dfao.alphabet, step)
    return Dfao(
        alphabet=dfao.alphabet,
        states=tuple(names[c] for c in order),
        initial=names[classes[dfao.initial]],
        transitions=transitions,
        outputs={names[c]: dfao.outputs[reps[c]] for c in order},
    )


def _require_same_alphabet(m1: Machine, m2: Machine):
    if tuple(m1.alphabet) != tuple(m2.alphabet):
        raise ValueError(
            f"alphabet mismatch: {' '.join(m1.alphabet)!r} vs {' '.join(m2.alphabet)!r}"
        )


def _path(back: dict, node) -> str:
    letters = []
    while back[node] is not None:
        node, letter = back[node]
        letters.append(letter)
    return "".join(reversed(letters))


def counterexample(d1: Dfa, d2: Dfa) -> str | None:
    """Shortest word accepted by exactly one of the two DFAs, or None.

    Breadth-first search of the product automaton, so the answer is exact;
    no sampling is involved.
    """
    _require_same_alphabet(d1, d2)
    start = (d1.initial, d2.initial)
    back: dict = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        s1, s2 = pair
        if (s1 in d1.accepting) != (s2 in d2.accepting):
            return _path(back, pair)
        for letter in d1.alphabet:
            nxt = (d1.transitions[s1, letter], d2.transitions[s2, letter])
            if nxt not in back:
                back[nxt] = (pair, letter)
                queue.append(nxt)
    return None


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    return counterexample(d1, d2) is None


def dfao_counterexample(d1: Dfao, d2: Dfao) -> str | None:
    """Shortest word on which the two output machines disagree, or None."""
    _require_same_alphabet(d1, d2)
    start = (d1.initial, d2.initial)
    back: dict = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        s1, s2 = pair
        if d1.outputs[s1] != d2.outputs[s2]:
            return _path(back, pair)
        for letter in d1.alphabet:
            nxt = (d1.transitions[s1, letter], d2.transitions[s2, letter])
            if nxt not in back:
                back[nxt] = (pair, letter)
                queue.append(nxt)
    return None


def dfao_equivalent(d1: Dfao, d2: Dfao) -> bool:
    return dfao_counterexample(d1, d2) is None


def _product(d1: Dfa, d2: Dfa, keep: Callable[[bool, bool], bool]) -> Dfa:
    _require_same_alphabet(d1, d2)
    t1, t2 = d1.transitions, d2.transitions

    def step(pair, letter):
        return (t1[pair[0], letter], t2[pair[1], letter])

    start = (d1.initial, d2.initial)
    order, names, transitions = _explore(start, d1.alphabet, step)
    accepting = frozenset(
        names[p] for p in order if keep(p[0] in d1.accepting, p[1] in d2.accepting)
    )
    return Dfa(
        alphabet=d1.alphabet,
        states=tuple(names[p] for p in order),
        initial=names[start],
        accepting=accepting,
        transitions=transitions,
    )


def intersection(d1: Dfa, d2: Dfa) -> Dfa:
    return _product(d1, d2, lambda x, y: x and y)


def union(d1: Dfa, d2: Dfa) -> Dfa:
    return _product(d1, d2, lambda x, y: x or y)


def difference(d1: Dfa, d2: Dfa) -> Dfa:
    return _product(d1, d2, lambda x, y: x and not y)


def complement(dfa: Dfa) -> Dfa:
    return replace(dfa, accepting=frozenset(dfa.states) - dfa.accepting)


def shortest_accepted(dfa: Dfa) -> str | None:
    """Shortest accepted word, or None for the empty language."""
    back: dict = {dfa.initial: None}
    queue = deque([dfa.initial])
    while queue:
        state = queue.popleft()
        if state in dfa.accepting:
            return _path(back, state)
        for letter in dfa.alphabet:
            nxt = dfa.transitions[state, letter]
            if nxt not in back:
                back[nxt] = (state, letter)
                queue.append(nxt)
    return None


def is_empty(dfa: Dfa) -> bool:
    return shortest_accepted(dfa) is None
