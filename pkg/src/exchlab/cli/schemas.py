"""Pydantic schemas for the ``--json`` output of the CLI."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from exchlab.checks.exchangeability import VerificationReport
from exchlab.dist.types import JointDistribution, format_outcome
from exchlab.linalg.rational import format_rational
from exchlab.search.gap import GapDimensions


class WitnessModel(BaseModel):
    first: str
    first_mass: str
    second: str
    second_mass: str


class ReportModel(BaseModel):
    mode: str
    verdict: Literal["PASS", "FAIL"]
    witness: WitnessModel | None = None
    coloring: str | None = None

    @classmethod
    def from_report(cls, report: VerificationReport) -> ReportModel:
        witness = None
        if report.witness is not None:
            witness = WitnessModel(
                first=format_outcome(report.witness.first),
                first_mass=format_rational(report.witness.first_mass),
                second=format_outcome(report.witness.second),
                second_mass=format_rational(report.witness.second_mass),
            )
        return cls(
            mode=report.mode,
            verdict=report.status,
            witness=witness,
            coloring=report.coloring.label() if report.coloring is not None else None,
        )


class VerifyResponse(BaseModel):
    reports: list[ReportModel]


class DimsResponse(BaseModel):
    two_color: int
    exchangeable: int

    @classmethod
    def from_dims(cls, dims: GapDimensions) -> DimsResponse:
        return cls(two_color=dims.two_color, exchangeable=dims.exchangeable)


class DistributionModel(BaseModel):
    alphabet: list[int]
    n: int
    masses: dict[str, str] = Field(description="outcome text -> p/q, lexicographic order")

    @classmethod
    def from_distribution(cls, distribution: JointDistribution) -> DistributionModel:
        return cls(
            alphabet=list(distribution.alphabet.symbols),
            n=distribution.n,
            masses={
                format_outcome(outcome): format_rational(mass)
                for outcome, mass in distribution.masses.items()
            },
        )


class SearchResponse(BaseModel):
    dims: DimsResponse
    witness: DistributionModel | None = None
