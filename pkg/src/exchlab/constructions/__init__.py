"""Counterexample constructions."""

from exchlab.constructions.counterexamples import (
    general_counterexample,
    general_mass,
    pair_counterexample,
)
from exchlab.constructions.omega import (
    FIRST,
    OMEGA_ALPHABET,
    SECOND,
    OmegaIndex,
    decode,
    encode,
    omega_family,
    omega_indices,
    omega_predicate_outcomes,
)
from exchlab.constructions.registry import CONSTRUCTIONS, build_construction

__all__ = [
    "CONSTRUCTIONS",
    "FIRST",
    "OMEGA_ALPHABET",
    "SECOND",
    "OmegaIndex",
    "build_construction",
    "decode",
    "encode",
    "general_counterexample",
    "general_mass",
    "omega_family",
    "omega_indices",
    "omega_predicate_outcomes",
    "pair_counterexample",
]
