"""Exact exchangeability and two-color exchangeability checks."""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from exchlab.config import get_settings
from exchlab.dist.core import nontrivial_colorings, pushforward
from exchlab.dist.orbits import orbit_key, orbit_members, orbit_size
from exchlab.dist.types import Coloring, JointDistribution, Outcome, format_outcome
from exchlab.linalg.rational import format_rational

logger = logging.getLogger(__name__)

Mode = Literal["exchangeable", "two-color", "both"]
EXCHANGEABLE = "exchangeable"
TWO_COLOR = "two-color"


@dataclass(frozen=True)
class Witness:
    """Two outcomes in one permutation orbit with different masses."""

    first: Outcome
    first_mass: Fraction
    second: Outcome
    second_mass: Fraction

    def to_text(self) -> str:
        return (
            f"{format_outcome(self.first)} mass {format_rational(self.first_mass)} != "
            f"{format_outcome(self.second)} mass {format_rational(self.second_mass)}"
        )


@dataclass(frozen=True)
class VerificationReport:
    mode: str
    verdict: bool
    witness: Witness | None = None
    coloring: Coloring | None = None

    def __post_init__(self) -> None:
        if self.verdict == (self.witness is not None):
            raise ValueError("a FAIL verdict needs a witness and a PASS verdict must not have one")

    @property
    def status(self) -> str:
        return "PASS" if self.verdict else "FAIL"

    def to_text(self) -> str:
        lines = [f"mode: {self.mode}", f"verdict: {self.status}"]
        if self.witness is not None:
            lines.append(f"witness: {self.witness.to_text()}")
        if self.coloring is not None:
            lines.append(f"coloring: {self.coloring.label()}")
        return "\n".join(lines)


def _iter_violations(distribution: JointDistribution) -> Iterator[Witness]:
    alphabet = distribution.alphabet
    groups: defaultdict[Outcome, list[Outcome]] = defaultdict(list)
    for outcome in distribution.masses:
        groups[orbit_key(outcome, alphabet)].append(outcome)

    for key in sorted(groups, key=alphabet.sort_key):
        members = groups[key]
        key_mass = distribution.mass(key)
        complete = len(members) == orbit_size(key)
        if complete and all(distribution.masses[member] == key_mass for member in members):
            continue
        if key_mass == 0:
            # every stored member differs from the absent key
            second = min(members, key=alphabet.sort_key)
        else:
            # members scanned before the hit carry key_mass > 0, so they are stored
            second = next(
                member
                for member in orbit_members(key, alphabet)
                if distribution.mass(member) != key_mass
            )
        yield Witness(key, key_mass, second, distribution.mass(second))


def exchangeability_violations(distribution: JointDistribution) -> list[Witness]:
    """Smallest witness pair of every violating orbit, ordered by orbit key."""

    return list(_iter_violations(distribution))


def is_exchangeable(distribution: JointDistribution) -> VerificationReport:
    """PASS iff the mass is constant on every permutation orbit.

    Orbits are never materialized when they are consistent: stored outcomes are grouped by
    orbit key and each group's size is compared with the multinomial orbit size.
    """

    witness = next(_iter_violations(distribution), None)
    return VerificationReport(mode=EXCHANGEABLE, verdict=witness is None, witness=witness)


def is_exchangeable_oracle(distribution: JointDistribution, max_n: int | None = None) -> bool:
    """Check invariance under each of the n! coordinate permutations explicitly."""

    limit = max_n if max_n is not None else get_settings().oracle_max_n
    if distribution.n > limit:
        logger.warning("Oracle refused n=%s (limit %s)", distribution.n, limit)
        raise ValueError("oracle guard exceeded")
    for permutation in itertools.permutations(range(distribution.n)):
        for outcome, mass in distribution.masses.items():
            permuted = tuple(outcome[index] for index in permutation)
            if distribution.mass(permuted) != mass:
                return False
    return True


def is_two_color_exchangeable(distribution: JointDistribution) -> VerificationReport:
    """PASS iff every non-constant coloring pushes the law to an exchangeable binary law.

    Only complement representatives are checked; the first failing one in enumeration order is
    reported together with its binary witness pair.
    """

    for coloring in nontrivial_colorings(distribution.alphabet):
        report = is_exchangeable(pushforward(distribution, coloring))
        logger.debug("Coloring %s -> %s", coloring.label(), report.status)
        if not report.verdict:
            return VerificationReport(
                mode=TWO_COLOR,
                verdict=False,
                witness=report.witness,
                coloring=coloring,
            )
    return VerificationReport(mode=TWO_COLOR, verdict=True)


def verify(distribution: JointDistribution, mode: Mode = "both") -> list[VerificationReport]:
    """Run the checks selected by ``mode`` in a fixed order."""

    if mode not in (EXCHANGEABLE, TWO_COLOR, "both"):
        raise ValueError(f"Unknown mode '{mode}'")
    reports = []
    if mode in (EXCHANGEABLE, "both"):
        reports.append(is_exchangeable(distribution))
    if mode in (TWO_COLOR, "both"):
        reports.append(is_two_color_exchangeable(distribution))
    return reports
