"""Linear equality systems describing exchangeable and two-color exchangeable laws.

A law on a fixed support is a probability vector ``p`` indexed by the support outcomes. Each
system is homogeneous: every row ``r`` states ``r . p = 0``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from exchlab.config import get_settings
from exchlab.constructions.omega import (
    FIRST,
    OMEGA_ALPHABET,
    SECOND,
    OmegaIndex,
    Which,
    decode,
    omega_family,
)
from exchlab.dist.core import make_distribution, nontrivial_colorings
from exchlab.dist.orbits import orbit_key, orbit_size
from exchlab.dist.types import Alphabet, JointDistribution, Outcome, format_outcome
from exchlab.linalg.matrix import RationalMatrix, rank

# Pair sums that must not depend on the position i for a law on Omega to be two-color
# exchangeable: one condition per (coloring delta_alpha, weight class 1 or n-1).
OMEGA_CONDITIONS: tuple[tuple[tuple[int, Which], tuple[int, Which]], ...] = (
    ((-1, FIRST), (-1, SECOND)),
    ((0, FIRST), (1, FIRST)),
    ((0, FIRST), (0, SECOND)),
    ((-1, FIRST), (1, SECOND)),
    ((1, FIRST), (1, SECOND)),
    ((-1, SECOND), (0, SECOND)),
)


@dataclass(frozen=True)
class SupportSpec:
    """Ordered, permutation-closed support; positions index the probability vector."""

    alphabet: Alphabet
    n: int
    support: tuple[Outcome, ...]
    _positions: dict[Outcome, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        support = tuple(tuple(outcome) for outcome in self.support)
        for outcome in support:
            if not self.alphabet.is_valid(outcome, self.n):
                raise ValueError(f"invalid outcome {format_outcome(outcome)}")
        positions = {outcome: index for index, outcome in enumerate(support)}
        if len(positions) != len(support):
            raise ValueError("support has duplicate outcomes")
        orbit_counts = Counter(orbit_key(outcome, self.alphabet) for outcome in support)
        if any(count != orbit_size(key) for key, count in orbit_counts.items()):
            raise ValueError("support not permutation-closed")
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "_positions", positions)

    def __len__(self) -> int:
        return len(self.support)

    def position(self, outcome: Outcome) -> int:
        return self._positions[tuple(outcome)]


@dataclass(frozen=True)
class ConstraintSystem:
    spec: SupportSpec
    matrix: RationalMatrix

    def __post_init__(self) -> None:
        if self.matrix.cols != len(self.spec):
            raise ValueError("constraint matrix must have one column per support outcome")

    def rank(self) -> int:
        return rank(self.matrix)

    def dimension(self) -> int:
        """Dimension of the homogeneous solution space."""

        return self.matrix.cols - self.rank()

    def is_satisfied_by(self, vector: Sequence[Fraction | int]) -> bool:
        return not any(self.matrix.matvec(vector))


def full_support(alphabet: Alphabet, n: int, guard: int | None = None) -> SupportSpec:
    """Every outcome of length ``n`` in lexicographic order."""

    limit = guard if guard is not None else get_settings().support_guard
    if n < 1:
        raise ValueError("n must be at least 1")
    if len(alphabet) ** n > limit:
        raise ValueError("support too large")
    return SupportSpec(alphabet=alphabet, n=n, support=tuple(alphabet.outcomes(n)))


def omega_support(n: int) -> SupportSpec:
    return SupportSpec(alphabet=OMEGA_ALPHABET, n=n, support=tuple(omega_family(n)))


def _difference_row(size: int, plus: Sequence[int], minus: Sequence[int]) -> list[int]:
    row = [0] * size
    for index in plus:
        row[index] += 1
    for index in minus:
        row[index] -= 1
    return row


def exchangeability_constraints(spec: SupportSpec) -> ConstraintSystem:
    """Chain ``p_a - p_b = 0`` over lexicographically adjacent members of each orbit."""

    alphabet = spec.alphabet
    orbits: defaultdict[Outcome, list[Outcome]] = defaultdict(list)
    for outcome in spec.support:
        orbits[orbit_key(outcome, alphabet)].append(outcome)
    size = len(spec)
    rows = []
    for key in sorted(orbits, key=alphabet.sort_key):
        members = sorted(orbits[key], key=alphabet.sort_key)
        for left, right in zip(members, members[1:]):
            rows.append(_difference_row(size, [spec.position(left)], [spec.position(right)]))
    return ConstraintSystem(spec=spec, matrix=RationalMatrix.from_rows(rows, cols=size))


def two_color_constraints(spec: SupportSpec) -> ConstraintSystem:
    """Equate pushforward masses of adjacent binary outcomes of equal weight, per coloring.

    Only binary outcomes reached from the support take part, so no vacuous rows appear.
    """

    size = len(spec)
    rows = []
    for coloring in nontrivial_colorings(spec.alphabet):
        preimages: defaultdict[Outcome, list[int]] = defaultdict(list)
        for index, outcome in enumerate(spec.support):
            preimages[coloring.apply(outcome)].append(index)
        by_weight: defaultdict[int, list[Outcome]] = defaultdict(list)
        for image in preimages:
            by_weight[sum(image)].append(image)
        for weight in sorted(by_weight):
            members = sorted(by_weight[weight])
            for left, right in zip(members, members[1:]):
                rows.append(_difference_row(size, preimages[left], preimages[right]))
    return ConstraintSystem(spec=spec, matrix=RationalMatrix.from_rows(rows, cols=size))


def stacked(first: ConstraintSystem, second: ConstraintSystem) -> ConstraintSystem:
    if first.spec != second.spec:
        raise ValueError("systems are defined over different supports")
    return ConstraintSystem(spec=first.spec, matrix=first.matrix.vstack(second.matrix))


def omega_condition_system(n: int) -> ConstraintSystem:
    """Pair-sum conditions on the Omega support, written with first/second indexing."""

    spec = omega_support(n)
    size = len(spec)

    def position_of(alpha: int, which: Which, i: int) -> int:
        return spec.position(decode(OmegaIndex(alpha=alpha, i=i, which=which), n))

    rows = []
    for pair in OMEGA_CONDITIONS:
        for i in range(1, n):
            rows.append(
                _difference_row(
                    size,
                    [position_of(alpha, which, i) for alpha, which in pair],
                    [position_of(alpha, which, i + 1) for alpha, which in pair],
                )
            )
    return ConstraintSystem(spec=spec, matrix=RationalMatrix.from_rows(rows, cols=size))


def lift(spec: SupportSpec, vector: Sequence[Fraction | int]) -> JointDistribution:
    """Read a nonnegative vector summing to 1 as a law on the support."""

    if len(vector) != len(spec):
        raise ValueError(f"vector has {len(vector)} entries, expected {len(spec)}")
    return make_distribution(spec.alphabet, spec.n, zip(spec.support, vector, strict=True))
