"""Exchangeability and two-color exchangeability verdict tests."""

from __future__ import annotations

from fractions import Fraction
from types import SimpleNamespace

import pytest

from exchlab.checks import (
    VerificationReport,
    exchangeability,
    exchangeability_violations,
    is_exchangeable,
    is_exchangeable_oracle,
    is_two_color_exchangeable,
    orbit_key,
    verify,
)
from exchlab.constructions import encode, general_counterexample, pair_counterexample
from exchlab.dist import (
    Alphabet,
    all_colorings,
    make_distribution,
    point_mass,
    pushforward,
    relabel,
    symmetrize,
)

TRIPLE = Alphabet((-1, 0, 1))


def _drop_one(distribution, rng):
    """Remove one stored outcome and renormalize; breaks the orbit it belonged to."""

    support = list(distribution.support())
    if len(support) == 1:
        return distribution
    dropped = rng.choice(support)
    rest = sum(mass for outcome, mass in distribution.masses.items() if outcome != dropped)
    entries = [
        (outcome, mass / rest)
        for outcome, mass in distribution.masses.items()
        if outcome != dropped
    ]
    return make_distribution(distribution.alphabet, distribution.n, entries)


def _assert_self_certifying(distribution, witness) -> None:
    alphabet = distribution.alphabet
    assert orbit_key(witness.first, alphabet) == orbit_key(witness.second, alphabet)
    assert witness.first_mass == distribution.mass(witness.first)
    assert witness.second_mass == distribution.mass(witness.second)
    assert witness.first_mass != witness.second_mass


def test_orbit_key_examples() -> None:
    assert orbit_key((1, -1, 0)) == (-1, 0, 1)
    assert orbit_key((0, 0)) == (0, 0)
    assert {orbit_key(o) for o in [(-1, -1, 1), (-1, 1, -1), (1, -1, -1)]} == {(-1, -1, 1)}
    assert orbit_key((-1, 0, 1), Alphabet((1, 0, -1))) == (1, 0, -1)


def test_pair_counterexample_is_not_exchangeable() -> None:
    report = is_exchangeable(pair_counterexample())
    assert not report.verdict
    assert report.witness.first == (-1, 0)
    assert report.witness.second == (0, -1)
    assert (report.witness.first_mass, report.witness.second_mass) == (
        Fraction(1, 9),
        Fraction(2, 9),
    )
    assert report.to_text() == (
        "mode: exchangeable\nverdict: FAIL\nwitness: (-1,0) mass 1/9 != (0,-1) mass 2/9"
    )


def test_pair_counterexample_is_two_color_exchangeable() -> None:
    report = is_two_color_exchangeable(pair_counterexample())
    assert report.verdict
    assert report.witness is None
    assert report.to_text() == "mode: two-color\nverdict: PASS"


def test_two_color_failure_names_first_coloring() -> None:
    distribution = make_distribution(
        TRIPLE,
        2,
        [((-1, 0), Fraction(1, 2)), ((0, -1), Fraction(1, 4)), ((1, 1), Fraction(1, 4))],
    )
    report = is_two_color_exchangeable(distribution)
    assert not report.verdict
    assert report.coloring.ones == frozenset({0})
    assert report.witness.first == (0, 1)
    assert report.witness.first_mass == Fraction(1, 2)
    assert report.witness.second == (1, 0)
    assert report.witness.second_mass == Fraction(1, 4)
    assert report.to_text().endswith("coloring: ones={0}")


def test_two_color_checks_one_pushforward_per_representative(mocker) -> None:
    spy = mocker.spy(exchangeability, "pushforward")
    is_two_color_exchangeable(pair_counterexample())
    assert spy.call_count == 3


def test_incomplete_orbit_is_reported() -> None:
    report = is_exchangeable(point_mass(TRIPLE, (1, 0)))
    assert not report.verdict
    assert report.witness.first == (0, 1)
    assert report.witness.first_mass == 0
    assert report.witness.second == (1, 0)

    # key present, a later member missing
    partial = make_distribution(
        TRIPLE, 3, [((-1, 0, 0), Fraction(1, 2)), ((0, -1, 0), Fraction(1, 2))]
    )
    witness = is_exchangeable(partial).witness
    assert (witness.first, witness.second) == ((-1, 0, 0), (0, 0, -1))
    assert witness.second_mass == 0


def test_general_counterexample_violations() -> None:
    for n in range(3, 9):
        distribution = general_counterexample(n)
        report = is_exchangeable(distribution)
        assert not report.verdict
        assert report.witness.first == (-1,) * (n - 1) + (0,)
        _assert_self_certifying(distribution, report.witness)

        singleton_minus_one = (-1,) + (0,) * (n - 1)
        violation = next(
            w for w in exchangeability_violations(distribution) if w.first == singleton_minus_one
        )
        first, second = encode(violation.first), encode(violation.second)
        assert (first.alpha, first.which, first.i) == (-1, "first", 1)
        assert (second.alpha, second.which, second.i) == (-1, "first", 2)
        assert is_two_color_exchangeable(distribution).verdict


def test_oracle_examples() -> None:
    assert not is_exchangeable_oracle(pair_counterexample())
    binary = Alphabet.binary()
    uniform = make_distribution(binary, 3, [(o, Fraction(1, 8)) for o in binary.outcomes(3)])
    assert is_exchangeable_oracle(uniform)
    assert is_exchangeable(uniform).verdict


def test_oracle_guard(monkeypatch) -> None:
    long_point = point_mass(Alphabet((0,)), (0,) * 9)
    with pytest.raises(ValueError, match="oracle guard exceeded"):
        is_exchangeable_oracle(long_point)
    monkeypatch.setattr(exchangeability, "get_settings", lambda: SimpleNamespace(oracle_max_n=2))
    with pytest.raises(ValueError, match="oracle guard exceeded"):
        is_exchangeable_oracle(point_mass(TRIPLE, (0, 0, 0)))
    assert is_exchangeable_oracle(point_mass(TRIPLE, (0, 0, 0)), max_n=3)


def test_orbit_check_matches_oracle(rng, random_distribution) -> None:
    verdicts = {True: 0, False: 0}
    for index in range(1200):
        kind = index % 3
        if kind == 0:
            distribution = random_distribution()
        else:
            distribution = symmetrize(random_distribution(n=rng.randint(1, 4)))
            if kind == 2:
                distribution = _drop_one(distribution, rng)
        expected = is_exchangeable_oracle(distribution)
        report = is_exchangeable(distribution)
        assert report.verdict == expected
        if not report.verdict:
            _assert_self_certifying(distribution, report.witness)
        verdicts[expected] += 1
    assert verdicts[True] > 100
    assert verdicts[False] > 100


def test_exchangeable_implies_two_color(random_distribution) -> None:
    for _ in range(1000):
        distribution = symmetrize(random_distribution(n=4))
        assert is_two_color_exchangeable(distribution).verdict


def test_binary_alphabet_verdicts_coincide(rng, random_distribution) -> None:
    for index in range(600):
        distribution = random_distribution(alphabet_size=2)
        if index % 2:
            distribution = _drop_one(symmetrize(distribution), rng)
        exchangeable = is_exchangeable(distribution).verdict
        assert is_two_color_exchangeable(distribution).verdict == exchangeable


def test_representatives_agree_with_all_colorings(random_distribution) -> None:
    for _ in range(200):
        distribution = random_distribution(alphabet_size=3, n=3)
        every = all(
            is_exchangeable(pushforward(distribution, coloring)).verdict
            for coloring in all_colorings(distribution.alphabet)
        )
        assert is_two_color_exchangeable(distribution).verdict == every


def test_verdicts_invariant_under_relabeling(random_distribution) -> None:
    for _ in range(300):
        distribution = random_distribution(n=3)
        renamed = relabel(distribution, {s: 3 * s + 11 for s in distribution.alphabet})
        assert is_exchangeable(renamed).verdict == is_exchangeable(distribution).verdict
        assert (
            is_two_color_exchangeable(renamed).verdict
            == is_two_color_exchangeable(distribution).verdict
        )


def test_report_requires_witness_on_failure() -> None:
    with pytest.raises(ValueError):
        VerificationReport(mode="exchangeable", verdict=False)


def test_verify_modes() -> None:
    reports = verify(pair_counterexample(), "both")
    statuses = [(r.mode, r.status) for r in reports]
    assert statuses == [("exchangeable", "FAIL"), ("two-color", "PASS")]
    assert [r.mode for r in verify(pair_counterexample(), "two-color")] == ["two-color"]
    with pytest.raises(ValueError, match="Unknown mode"):
        verify(pair_counterexample(), "partial")
