"""Uniform tag systems: constant-length substitutions with a coding.

A system of modulus k replaces every symbol by a word of exactly k symbols.
When the rule for the start symbol begins with the start symbol itself, the
substitution can be iterated from that symbol forever and converges to an
infinite fixed point; applying the coding letterwise yields the output
sequence.  Entry n of the fixed point can also be computed directly by
walking the base-k digits of n through the rules, and both routes are
exposed so they can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .automata import Dfao, _token_problem
from .numeration import _DIGITS


class InvalidTagSystemError(ValueError):
    """Structural validation failed; ``problems`` lists every violation."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


@dataclass(frozen=True)
class TagSystem:
    """Uniform substitution ``rules`` of modulus k with a letterwise coding.

    ``rules[s]`` is the k-tuple that replaces s; ``coding[s]`` the output
    letter of s.  ``rules[start]`` must begin with ``start`` so the fixed
    point from ``start`` exists.
    """

    modulus: int
    symbols: tuple[str, ...]
    start: str
    rules: Mapping[str, tuple[str, ...]]
    coding: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        object.__setattr__(self, "rules", {s: tuple(w) for s, w in dict(self.rules).items()})
        object.__setattr__(self, "coding", dict(self.coding))
        problems = self._problems()
        if problems:
            raise InvalidTagSystemError(problems)

    def _problems(self) -> list[str]:
        problems = []
        if not isinstance(self.modulus, int) or self.modulus < 2:
            problems.append(f"modulus must be an integer >= 2, got {self.modulus!r}")
        if not self.symbols:
            problems.append("no symbols declared")
        seen = set()
        for symbol in self.symbols:
            bad = _token_problem("symbol", symbol)
            if bad:
                problems.append(bad)
            elif symbol in seen:
                problems.append(f"duplicate symbol {symbol!r}")
            seen.add(symbol)
        declared = set(self.symbols)
        if self.start not in declared:
            problems.append(f"start symbol {self.start!r} is not declared")

        for symbol, image in sorted(self.rules.items()):
            if symbol not in declared:
                problems.append(f"rule for undeclared symbol {symbol!r}")
            if isinstance(self.modulus, int) and len(image) != self.modulus:
                problems.append(
                    f"rule for {symbol!r} has length {len(image)}, expected {self.modulus}"
                )
            for target in image:
                if target not in declared:
                    problems.append(f"rule for {symbol!r} uses undeclared symbol {target!r}")
        for symbol in self.symbols:
            if symbol not in self.rules:
                problems.append(f"no rule for symbol {symbol!r}")

        for symbol, letter in sorted(self.coding.items()):
            if symbol not in declared:
                problems.append(f"coding for undeclared symbol {symbol!r}")
            bad = _token_problem("coding letter", letter)
            if bad:
                problems.append(bad)
        for symbol in self.symbols:
            if symbol not in self.coding:
                problems.append(f"no coding letter for symbol {symbol!r}")

        if not problems and self.rules[self.start][0] != self.start:
            problems.append(
                f"rule for the start symbol must begin with the start symbol, "
                f"got {self.start!r} -> {' '.join(self.rules[self.start])!r}"
            )
        return problems


def from_dfao(dfao: Dfao) -> TagSystem:
    """Read a digit machine off as a substitution: each state becomes a
    symbol whose rule lists its successors on the digits 0..k-1 in order,
    and the coding is the machine's output map.

    The machine's initial state must carry a self-loop on the digit 0;
    that loop is exactly what makes the substitution prolongable, and it
    also means leading zeros never change the machine's answer.
    """
    base = len(dfao.alphabet)
    if tuple(dfao.alphabet) != tuple(_DIGITS[:base]) or base < 2:
        raise ValueError(
            f"need a machine over the digit alphabet 0..k-1, got {' '.join(dfao.alphabet)!r}"
        )
    if dfao.transitions[dfao.initial, "0"] != dfao.initial:
        raise ValueError(
            f"the initial state {dfao.initial!r} has no self-loop on digit 0, "
            f"so the substitution would not be prolongable"
        )
    rules = {
        state: tuple(dfao.transitions[state, digit] for digit in dfao.alphabet)
        for state in dfao.states
    }
    return TagSystem(
        modulus=base,
        symbols=dfao.states,
        start=dfao.initial,
        rules=rules,
        coding=dict(dfao.outputs),
    )


def intseq(system: TagSystem, count: int) -> list[str]:
    """First ``count`` symbols of the fixed point, generated online: keep
    substituting the symbol at the read position and appending its image."""
    if not isinstance(count, int) or count < 0:
        raise ValueError(f"count must be a non-negative integer, got {count!r}")
    if count == 0:
        return []
    fixed = list(system.rules[system.start])
    read = 1
    while len(fixed) < count:
        fixed.extend(system.rules[fixed[read]])
        read += 1
    return fixed[:count]


def intseq_term(system: TagSystem, n: int) -> str:
    """Symbol n of the fixed point, computed independently of :func:`intseq`
    by descending the base-k digits of n through the rules."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    digits = []
    while n:
        n, d = divmod(n, system.modulus)
        digits.append(d)
    symbol = system.start
    for d in reversed(digits):
        symbol = system.rules[symbol][d]
    return symbol


def seq(system: TagSystem, count: int) -> list[str]:
    """First ``count`` letters of the coded fixed point."""
    return [system.coding[symbol] for symbol in intseq(system, count)]


def is_fixed_point_prefix(system: TagSystem, depth: int) -> bool:
    """Check that substituting the first ``depth`` symbols of the claimed
    fixed point reproduces its first modulus * depth symbols."""
    if not isinstance(depth, int) or depth < 0:
        raise ValueError(f"depth must be a non-negative integer, got {depth!r}")
    prefix = intseq(system, depth)
    image = [target for symbol in prefix for target in system.rules[symbol]]
    return image == intseq(system, system.modulus * depth)
