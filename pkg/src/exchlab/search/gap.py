"""Dimension gap between the two-color and the exchangeable solution spaces, and witnesses in it."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from exchlab.checks.exchangeability import is_exchangeable, is_two_color_exchangeable
from exchlab.config import get_settings
from exchlab.dist.types import JointDistribution
from exchlab.linalg.matrix import nullspace_basis
from exchlab.search.constraints import (
    ConstraintSystem,
    SupportSpec,
    exchangeability_constraints,
    lift,
    stacked,
    two_color_constraints,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GapDimensions:
    two_color: int
    exchangeable: int

    @property
    def has_gap(self) -> bool:
        return self.two_color > self.exchangeable

    def to_text(self) -> str:
        return f"dims: two_color={self.two_color} exchangeable={self.exchangeable}"


def _systems(spec: SupportSpec) -> tuple[ConstraintSystem, ConstraintSystem]:
    two_color = two_color_constraints(spec)
    exchangeable = stacked(exchangeability_constraints(spec), two_color)
    return two_color, exchangeable


def gap_dimensions(spec: SupportSpec) -> GapDimensions:
    """Solution-space dimensions; the exchangeable side uses the stacked system."""

    two_color, exchangeable = _systems(spec)
    return GapDimensions(two_color=two_color.dimension(), exchangeable=exchangeable.dimension())


def find_gap_witness(
    spec: SupportSpec,
    floor_divisor: int | None = None,
) -> JointDistribution | None:
    """Perturb the uniform law along a two-color direction that breaks exchangeability.

    The step is the largest power of 1/2 keeping every coordinate at or above
    ``1 / (floor_divisor * |support|)``. Returns None when the two spaces coincide.
    """

    divisor = floor_divisor if floor_divisor is not None else get_settings().witness_floor_divisor
    two_color, exchangeable = _systems(spec)
    dims = GapDimensions(two_color=two_color.dimension(), exchangeable=exchangeable.dimension())
    logger.info("Support of %s outcomes: %s", len(spec), dims.to_text())
    if not dims.has_gap:
        return None

    direction = next(
        vector
        for vector in nullspace_basis(two_color.matrix)
        if not exchangeable.is_satisfied_by(vector)
    )
    size = len(spec)
    uniform = Fraction(1, size)
    # the uniform law solves both systems, so subtracting it keeps both residuals unchanged
    drift = sum(direction, Fraction(0))
    direction = tuple(value - drift * uniform for value in direction)

    floor = Fraction(1, divisor * size)
    step = Fraction(1)
    while any(uniform + step * value < floor for value in direction):
        step /= 2
    logger.debug("Gap witness step %s", step)

    witness = lift(spec, [uniform + step * value for value in direction])
    if not is_two_color_exchangeable(witness).verdict or is_exchangeable(witness).verdict:
        raise RuntimeError("witness construction failed")
    return witness
