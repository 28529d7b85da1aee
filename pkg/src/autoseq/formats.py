"""Line-based text formats for machines and tag systems, plus DOT export.

A file is a sequence of directives, one per line; ``#`` starts a comment
and blank lines are ignored.  The first directive must be ``type`` with
one of ``dfa``, ``dfao`` or ``tag``.  Parsing reports the offending line;
problems that span the whole machine (a missing transition, say) are
reported without a line number.  Serialization is deterministic, so equal
machines always dump to identical text.
"""

from __future__ import annotations

from pathlib import Path

from .automata import Dfa, Dfao, InvalidAutomatonError, Machine
from .tagsystem import InvalidTagSystemError, TagSystem


class FormatError(ValueError):
    """A problem in a machine file, located by source name and line."""

    def __init__(self, message: str, source: str = "<input>", line: int | None = None):
        self.source = source
        self.line = line
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


def _rows(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield lineno, tokens


def parse(text: str, source: str = "<input>") -> Dfa | Dfao | TagSystem:
    """Parse a machine description; the ``type`` directive picks the shape."""
    rows = list(_rows(text))
    if not rows:
        raise FormatError("empty input: expected a 'type' directive", source)
    lineno, tokens = rows[0]
    if tokens[0] != "type" or len(tokens) != 2:
        raise FormatError("the first directive must be 'type dfa|dfao|tag'", source, lineno)
    kind = tokens[1]
    if kind in ("dfa", "dfao"):
        return _parse_automaton(kind, rows[1:], source)
    if kind == "tag":
        return _parse_tag(rows[1:], source)
    raise FormatError(f"unknown machine type {kind!r}", source, lineno)


def _single(seen: dict, lineno, head, source):
    if head in seen:
        raise FormatError(f"duplicate {head!r} directive (first on line {seen[head]})", source, lineno)
    seen[head] = lineno


def _parse_automaton(kind: str, rows, source: str) -> Dfa | Dfao:
    seen: dict = {}
    alphabet = states = initial = accepting = None
    outputs: dict = {}
    transitions: dict = {}
    trans_rows = []

    for lineno, tokens in rows:
        head, rest = tokens[0], tokens[1:]
        if head == "alphabet":
            _single(seen, lineno, head, source)
            alphabet = tuple(rest)
        elif head == "states":
            _single(seen, lineno, head, source)
            states = tuple(rest)
        elif head == "initial":
            _single(seen, lineno, head, source)
            if len(rest) != 1:
                raise FormatError("'initial' takes exactly one state id", source, lineno)
            initial = rest[0]
        elif head == "accepting":
            if kind != "dfa":
                raise FormatError("'accepting' only belongs in a dfa", source, lineno)
            _single(seen, lineno, head, source)
            accepting = tuple(rest)
        elif head == "outputs":
            if kind != "dfao":
                raise FormatError("'outputs' only belongs in a dfao", source, lineno)
            _single(seen, lineno, head, source)
            for token in rest:
                state, sep, letter = token.partition("=")
                if not sep or not state or not letter:
                    raise FormatError(f"malformed output {token!r}, expected state=letter", source, lineno)
                if state in outputs:
                    raise FormatError(f"duplicate output for state {state!r}", source, lineno)
                outputs[state] = letter
        elif head == "trans":
            if len(rest) != 3:
                raise FormatError("'trans' takes: source letter target", source, lineno)
            trans_rows.append((lineno, rest[0], rest[1], rest[2]))
        else:
            raise FormatError(f"unknown directive {head!r}", source, lineno)

    for directive, value in (("alphabet", alphabet), ("states", states), ("initial", initial)):
        if value is None:
            raise FormatError(f"missing {directive!r} directive", source)
    if kind == "dfa" and accepting is None:
        raise FormatError("missing 'accepting' directive (it may list zero ids)", source)
    if kind == "dfao" and "outputs" not in seen:
        raise FormatError("missing 'outputs' directive", source)

    declared = set(states)
    letters = set(alphabet)
    for lineno, state, letter, target in trans_rows:
        for name, pool in ((state, declared), (target, declared)):
            if name not in pool:
                raise FormatError(f"undeclared state {name!r}", source, lineno)
        if letter not in letters:
            raise FormatError(f"undeclared letter {letter!r}", source, lineno)
        if (state, letter) in transitions:
            raise FormatError(f"duplicate transition for ({state!r}, {letter!r})", source, lineno)
        transitions[state, letter] = target

    try:
        if kind == "dfa":
            return Dfa(
                alphabet=alphabet,
                states=states,
                initial=initial,
                accepting=frozenset(accepting),
                transitions=transitions,
            )
        return Dfao(
            alphabet=alphabet,
            states=states,
            initial=initial,
            transitions=transitions,
            outputs=outputs,
        )
    except InvalidAutomatonError as exc:
        raise FormatError(str(exc), source) from exc


def _parse_tag(rows, source: str) -> TagSystem:
    seen: dict = {}
    modulus = symbols = start = None
    rules: dict = {}
    coding: dict = {}

    for lineno, tokens in rows:
        head, rest = tokens[0], tokens[1:]
        if head == "modulus":
            _single(seen, lineno, head, source)
            if len(rest) != 1 or not rest[0].isdigit():
                raise FormatError("'modulus' takes one non-negative integer", source, lineno)
            modulus = int(rest[0])
        elif head == "symbols":
            _single(seen, lineno, head, source)
            symbols = tuple(rest)
        elif head == "start":
            _single(seen, lineno, head, source)
            if len(rest) != 1:
                raise FormatError("'start' takes exactly one symbol", source, lineno)
            start = rest[0]
        elif head == "morph":
            if len(rest) < 2 or rest[1] != "->":
                raise FormatError("'morph' takes: symbol -> image...", source, lineno)
            symbol, image = rest[0], tuple(rest[2:])
            if symbol in rules:
                raise FormatError(f"duplicate rule for symbol {symbol!r}", source, lineno)
            rules[symbol] = image
        elif head == "code":
            for token in rest:
                symbol, sep, letter = token.partition("=")
                if not sep or not symbol or not letter:
                    raise FormatError(f"malformed coding {token!r}, expected symbol=letter", source, lineno)
                if symbol in coding:
                    raise FormatError(f"duplicate coding for symbol {symbol!r}", source, lineno)
                coding[symbol] = letter
        else:
            raise FormatError(f"unknown directive {head!r}", source, lineno)

    for directive, value in (("modulus", modulus), ("symbols", symbols), ("start", start)):
        if value is None:
            raise FormatError(f"missing {directive!r} directive", source)

    try:
        return TagSystem(modulus=modulus, symbols=symbols, start=start, rules=rules, coding=coding)
    except InvalidTagSystemError as exc:
        raise FormatError(str(exc), source) from exc


def dump(machine: Machine | TagSystem) -> str:
    """Serialize a machine in the same text format :func:`parse` reads.

    Directives come out in a fixed order and transitions in declaration
    order of states and letters, so the output is stable.
    """
    if isinstance(machine, Dfa):
        lines = [
            "type dfa",
            "alphabet " + " ".join(machine.alphabet),
            "states " + " ".join(machine.states),
            "initial " + machine.initial,
            ("accepting " + " ".join(s for s in machine.states if s in machine.accepting)).rstrip(),
        ]
        lines += _trans_lines(machine)
    elif isinstance(machine, Dfao):
        lines = [
            "type dfao",
            "alphabet " + " ".join(machine.alphabet),
            "states " + " ".join(machine.states),
            "initial " + machine.initial,
            "outputs " + " ".join(f"{s}={machine.outputs[s]}" for s in machine.states),
        ]
        lines += _trans_lines(machine)
    elif isinstance(machine, TagSystem):
        lines = [
            "type tag",
            f"modulus {machine.modulus}",
            "symbols " + " ".join(machine.symbols),
            "start " + machine.start,
        ]
        lines += [f"morph {s} -> " + " ".join(machine.rules[s]) for s in machine.symbols]
        lines += [f"code {s}={machine.coding[s]}" for s in machine.symbols]
    else:
        raise TypeError(f"cannot serialize {type(machine).__name__}")
    return "\n".join(lines) + "\n"


def _trans_lines(machine: Machine) -> list[str]:
    return [
        f"trans {state} {letter} {machine.transitions[state, letter]}"
        for state in machine.states
        for letter in machine.alphabet
    ]


def load(path) -> Dfa | Dfao | TagSystem:
    """Parse the machine stored at ``path``."""
    text = Path(path).read_text(encoding="utf-8")
    return parse(text, source=str(path))


def save(machine: Machine | TagSystem, path):
    Path(path).write_text(dump(machine), encoding="utf-8")


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(machine: Machine) -> str:
    """Graphviz rendering of a machine: double circles for accepting states,
    ``state/output`` labels for output machines."""
    lines = ["digraph {", "  rankdir=LR;", '  __start [shape=none, label=""];']
    with_outputs = isinstance(machine, Dfao)
    for state in machine.states:
        if with_outputs:
            label = _quote(f"{state}/{machine.outputs[state]}")
            lines.append(f"  {_quote(state)} [shape=circle, label={label}];")
        else:
            shape = "doublecircle" if state in machine.accepting else "circle"
            lines.append(f"  {_quote(state)} [shape={shape}];")
    lines.append(f"  __start -> {_quote(machine.initial)};")
    for state in machine.states:
        for letter in machine.alphabet:
            target = machine.transitions[state, letter]
            lines.append(f"  {_quote(state)} -> {_quote(target)} [label={_quote(letter)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
