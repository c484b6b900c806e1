"""Explicit two-color exchangeable laws that are not exchangeable."""

from __future__ import annotations

from fractions import Fraction

from exchlab.constructions.omega import (
    FIRST,
    OMEGA_ALPHABET,
    SECOND,
    OmegaIndex,
    decode,
    omega_indices,
)
from exchlab.dist.core import make_distribution
from exchlab.dist.types import JointDistribution

PAIR_LIGHT = ((-1, 0), (0, 1), (1, -1))
PAIR_HEAVY = ((0, -1), (1, 0), (-1, 1))

# Families whose mass decreases with the position i; the rest increase with i.
_DECREASING = {(-1, FIRST), (1, FIRST), (0, SECOND)}


def pair_counterexample() -> JointDistribution:
    """Length-2 law on {-1, 0, 1}: a cyclic shift of the off-diagonal gets 1/9, the reverse 2/9."""

    entries = [(outcome, Fraction(1, 9)) for outcome in PAIR_LIGHT]
    entries += [(outcome, Fraction(2, 9)) for outcome in PAIR_HEAVY]
    return make_distribution(OMEGA_ALPHABET, 2, entries)


def general_mass(index: OmegaIndex, n: int) -> Fraction:
    normalizer = 3 * n * (n + 1)
    if (index.alpha, index.which) in _DECREASING:
        return Fraction(n - index.i + 1, normalizer)
    return Fraction(index.i, normalizer)


def general_counterexample(n: int) -> JointDistribution:
    """Law on the Omega support of length ``n`` (n >= 3).

    Every coloring pushforward puts mass 1/(3n) on each binary outcome of weight 1 and n-1,
    while the masses inside single permutation orbits still depend on the position.
    """

    entries = [(decode(index, n), general_mass(index, n)) for index in omega_indices(n)]
    return make_distribution(OMEGA_ALPHABET, n, entries)
