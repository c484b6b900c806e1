"""Exchangeability verdicts with self-certifying witnesses."""

from exchlab.checks.exchangeability import (
    EXCHANGEABLE,
    TWO_COLOR,
    VerificationReport,
    Witness,
    exchangeability_violations,
    is_exchangeable,
    is_exchangeable_oracle,
    is_two_color_exchangeable,
    verify,
)
from exchlab.dist.orbits import orbit_key

__all__ = [
    "EXCHANGEABLE",
    "TWO_COLOR",
    "VerificationReport",
    "Witness",
    "exchangeability_violations",
    "is_exchangeable",
    "is_exchangeable_oracle",
    "is_two_color_exchangeable",
    "orbit_key",
    "verify",
]
