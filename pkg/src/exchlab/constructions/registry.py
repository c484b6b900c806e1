"""Named constructions resolvable from the command line (``pair``, ``general:<n>``)."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from exchlab.constructions.counterexamples import general_counterexample, pair_counterexample
from exchlab.dist.types import JointDistribution


@dataclass
class ConstructionConfig:
    builder: Callable[..., JointDistribution]
    takes_length: bool
    description: str


CONSTRUCTIONS: dict[str, ConstructionConfig] = {
    "pair": ConstructionConfig(
        builder=pair_counterexample,
        takes_length=False,
        description="length-2 law on {-1,0,1} with masses 1/9 and 2/9",
    ),
    "general": ConstructionConfig(
        builder=general_counterexample,
        takes_length=True,
        description="length-n law on the Omega support, n >= 3",
    ),
}

VALID_CONSTRUCTIONS: tuple[str, ...] = ("pair", "general:<n>")


def build_construction(name: str) -> JointDistribution:
    base, _, argument = name.partition(":")
    config = CONSTRUCTIONS.get(base)
    if config is None:
        raise ValueError(f"Unknown construction '{name}'. Available: {list(VALID_CONSTRUCTIONS)}")
    if not config.takes_length:
        if argument:
            raise ValueError(f"Construction '{base}' takes no parameter")
        return config.builder()
    try:
        n = int(argument)
    except ValueError:
        raise ValueError(f"invalid n '{argument}' for construction '{base}'") from None
    return config.builder(n)
