"""Constraint systems over a support and the search for two-color-only laws."""

from exchlab.search.constraints import (
    OMEGA_CONDITIONS,
    ConstraintSystem,
    SupportSpec,
    exchangeability_constraints,
    full_support,
    lift,
    omega_condition_system,
    omega_support,
    stacked,
    two_color_constraints,
)
from exchlab.search.gap import GapDimensions, find_gap_witness, gap_dimensions

__all__ = [
    "OMEGA_CONDITIONS",
    "ConstraintSystem",
    "GapDimensions",
    "SupportSpec",
    "exchangeability_constraints",
    "find_gap_witness",
    "full_support",
    "gap_dimensions",
    "lift",
    "omega_condition_system",
    "omega_support",
    "stacked",
    "two_color_constraints",
]
