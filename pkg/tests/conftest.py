"""Shared fixtures and helpers: checked-in machines, seeded random machines,
and a brute-force word enumerator used as the oracle for shortlex indexing."""

import itertools
import random
from pathlib import Path

import pytest

from autoseq import Dfa, Dfao, load

MACHINES = Path(__file__).resolve().parent.parent / "machines"


def words_in_order(alphabet, count):
    """First ``count`` words by length, then alphabetically.

    Plain enumeration with itertools.product, deliberately independent of
    the arithmetic conversions in the package.
    """
    out = []
    length = 0
    while True:
        for letters in itertools.product(alphabet, repeat=length):
            if len(out) == count:
                return out
            out.append("".join(letters))
        length += 1


def random_dfa(rng: random.Random, max_states=6, alphabet=("a", "b")) -> Dfa:
    count = rng.randint(1, max_states)
    states = tuple(f"s{i}" for i in range(count))
    return Dfa(
        alphabet=tuple(alphabet),
        states=states,
        initial=states[0],
        accepting=frozenset(s for s in states if rng.random() < 0.5),
        transitions={
            (state, letter): states[rng.randrange(count)]
            for state in states
            for letter in alphabet
        },
    )


def random_dfao(rng: random.Random, max_states=6, alphabet=("0", "1"), letters=("0", "1")) -> Dfao:
    count = rng.randint(1, max_states)
    states = tuple(f"s{i}" for i in range(count))
    return Dfao(
        alphabet=tuple(alphabet),
        states=states,
        initial=states[0],
        transitions={
            (state, letter): states[rng.randrange(count)]
            for state in states
            for letter in alphabet
        },
        outputs={state: rng.choice(letters) for state in states},
    )


@pytest.fixture(scope="session")
def no_bb() -> Dfa:
    return load(MACHINES / "no_bb.aut")


@pytest.fixture(scope="session")
def thue_morse() -> Dfao:
    return load(MACHINES / "thue_morse.aut")


@pytest.fixture(scope="session")
def paperfold() -> Dfao:
    return load(MACHINES / "paperfold.aut")


@pytest.fixture(scope="session")
def no_bb_ones() -> Dfa:
    return load(MACHINES / "no_bb_ones.aut")


@pytest.fixture(scope="session")
def no_bb_zeros() -> Dfa:
    return load(MACHINES / "no_bb_zeros.aut")


@pytest.fixture(scope="session")
def no_bb_fao() -> Dfao:
    return load(MACHINES / "no_bb_fao.aut")


@pytest.fixture(scope="session")
def no_bb_tag():
    return load(MACHINES / "no_bb.tag")


# First 25 bits of the no-bb characteristic sequence, frozen by hand from
# the word list: the n-th shortlex word over a, b is checked for a "bb"
# factor (index 6 is bb, 10 is abb, 13 is bba, 14 is bbb, ...).
NO_BB_PREFIX = [1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 0, 1, 1, 1, 0, 1, 1, 0, 0, 1, 1]

# Thue-Morse: bit-count parity of n, for n < 25.
THUE_MORSE_PREFIX = [0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0]

# Regular paperfolding values for n < 24.
PAPERFOLD_PREFIX = [1, 1, 1, 0, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0, 1, 1, 1, 0, 1, 1, 0, 0]
