"""The Omega support: length-n outcomes over {-1, 0, 1} made of exactly two distinct symbols,
one of them (the singleton) appearing once.

For a singleton symbol ``alpha`` and a position ``i`` there are two such outcomes with ``alpha``
at ``i``; in lexicographic order they are the *first* and the *second* element of the pair.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Literal

from exchlab.dist.types import Alphabet, Outcome, format_outcome

OMEGA_ALPHABET = Alphabet((-1, 0, 1))
MIN_OMEGA_LENGTH = 3

Which = Literal["first", "second"]
FIRST: Which = "first"
SECOND: Which = "second"


@dataclass(frozen=True)
class OmegaIndex:
    alpha: int
    i: int
    which: Which

    def __post_init__(self) -> None:
        if self.alpha not in OMEGA_ALPHABET:
            raise ValueError(f"alpha must be one of {OMEGA_ALPHABET.symbols}")
        if self.i < 1:
            raise ValueError("positions are 1-based")
        if self.which not in (FIRST, SECOND):
            raise ValueError(f"which must be '{FIRST}' or '{SECOND}'")


def _check_length(n: int) -> None:
    if n < MIN_OMEGA_LENGTH:
        raise ValueError("n must be at least 3")


def _candidates(alpha: int, i: int, n: int) -> list[Outcome]:
    outcomes = [
        tuple(alpha if position == i else beta for position in range(1, n + 1))
        for beta in OMEGA_ALPHABET
        if beta != alpha
    ]
    return sorted(outcomes, key=OMEGA_ALPHABET.sort_key)


def decode(index: OmegaIndex, n: int) -> Outcome:
    _check_length(n)
    if index.i > n:
        raise ValueError(f"position {index.i} exceeds n = {n}")
    first, second = _candidates(index.alpha, index.i, n)
    return first if index.which == FIRST else second


def encode(outcome: Outcome) -> OmegaIndex:
    n = len(outcome)
    _check_length(n)
    counts = Counter(outcome)
    if len(counts) != 2 or sorted(counts.values()) != [1, n - 1]:
        raise ValueError(f"{format_outcome(outcome)} is not in Omega")
    alpha = next(symbol for symbol, count in counts.items() if count == 1)
    i = outcome.index(alpha) + 1
    first, _ = _candidates(alpha, i, n)
    return OmegaIndex(alpha=alpha, i=i, which=FIRST if outcome == first else SECOND)


def omega_indices(n: int) -> list[OmegaIndex]:
    """All 6n indices in (alpha, i, which) order."""

    _check_length(n)
    return [
        OmegaIndex(alpha=alpha, i=i, which=which)
        for alpha in OMEGA_ALPHABET
        for i in range(1, n + 1)
        for which in (FIRST, SECOND)
    ]


def omega_family(n: int) -> list[Outcome]:
    return [decode(index, n) for index in omega_indices(n)]


def omega_predicate_outcomes(n: int) -> list[Outcome]:
    """Outcomes in which every symbol occurs exactly 0, 1 or n-1 times, in lexicographic order.

    For n >= 4 this is the Omega family. For n = 3 it also admits the six all-distinct
    outcomes such as (-1,0,1), which ``omega_family`` leaves out.
    """

    if n < 2:
        raise ValueError("n must be at least 2")
    allowed = {0, 1, n - 1}
    return [
        outcome
        for outcome in OMEGA_ALPHABET.outcomes(n)
        if all(outcome.count(symbol) in allowed for symbol in OMEGA_ALPHABET)
    ]
