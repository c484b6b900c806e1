"""Shared fixtures: seeded random distributions for the randomized suites."""

from __future__ import annotations

import random
from collections.abc import Callable, Iterator
from fractions import Fraction

import pytest

from exchlab.config import get_settings
from exchlab.dist import Alphabet, JointDistribution, make_distribution

RandomDistribution = Callable[..., JointDistribution]


def _symbols(size: int) -> tuple[int, ...]:
    start = -(size // 2)
    return tuple(range(start, start + size))


def _random_distribution(
    rng: random.Random,
    alphabet_size: int | None = None,
    n: int | None = None,
    max_support: int = 8,
) -> JointDistribution:
    size = alphabet_size or rng.randint(1, 4)
    symbols = _symbols(size)
    length = n or rng.randint(1, 6)
    target = rng.randint(1, min(size**length, max_support))
    outcomes: set[tuple[int, ...]] = set()
    while len(outcomes) < target:
        outcomes.add(tuple(rng.choice(symbols) for _ in range(length)))
    weights = [rng.randint(1, 5) for _ in range(target)]
    total = sum(weights)
    entries = [
        (outcome, Fraction(weight, total))
        for outcome, weight in zip(sorted(outcomes), weights, strict=True)
    ]
    return make_distribution(Alphabet(symbols), length, entries)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def random_distribution(rng: random.Random) -> RandomDistribution:
    def factory(**kwargs) -> JointDistribution:
        return _random_distribution(rng, **kwargs)

    return factory


@pytest.fixture(autouse=True)
def _fresh_settings() -> Iterator[None]:
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
