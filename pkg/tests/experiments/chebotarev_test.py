"""Cycle pattern census tests"""

from fractions import Fraction

import pytest

from arboreal import CapExceededError, use_caps
from arboreal.algebra import QQ, NotPrimeError, Poly, UnsupportedFieldError, field_make
from arboreal.dynamics import is_in_H
from arboreal.experiments import (
    ForbiddenParametersError,
    cheb_scan,
    field_of_order,
    frob_sample,
)
from arboreal.wreath import CyclePattern, pattern_distribution


def _p(text: str) -> CyclePattern:
    return CyclePattern.parse(text)


def test_field_of_order() -> None:
    """Test for fields given by their order."""
    assert field_of_order(9) is field_make(3, 2)
    assert field_of_order(7) is field_make(7)
    with pytest.raises(NotPrimeError):
        field_of_order(6)


def test_cheb_scan_example() -> None:
    """Test for the census of monic quadratics over GF(3)."""
    report = cheb_scan(3, 1, 2, 1, seed=0)
    assert report.tallies == {_p("1^2"): 3, _p("2^1"): 3}
    assert report.non_squarefree == 3
    assert report.h_members == 9
    assert report.total == 9
    assert report.bound == 16.0
    assert report.violations == []
    assert report.unsupported == []

    rows = {row.pattern: row for row in report.comparison}
    assert rows[_p("2^1")].rho == Fraction(1, 2)
    assert rows[_p("2^1")].expected == Fraction(9, 2)
    assert rows[_p("2^1")].deviation == pytest.approx(1.5 / 3**1.5)
    assert report.max_deviation == pytest.approx(1.5 / 3**1.5)


@pytest.mark.parametrize("q,b,d,n", [(5, 2, 2, 2), (7, 1, 3, 1), (4, 3, 3, 1), (3, 2, 3, 2)])
def test_cheb_scan_support(q: int, b: int, d: int, n: int) -> None:
    """Test for censuses that only see patterns of the iterated wreath product."""
    report = cheb_scan(q, b, d, n, seed=1)
    assert report.total == q**d
    assert report.unsupported == []
    assert report.violations == []


census_data = [(q, 2, n) for q in [3, 5, 7, 9, 11, 13, 25, 27] for n in [1, 2, 3]] + [
    (q, 3, n) for q in [5, 7, 11, 13] for n in [1, 2]
]


@pytest.mark.parametrize("q,d,n", census_data)
def test_cheb_scan_census(q: int, d: int, n: int) -> None:
    """Test for the partition identity, the support and the deviation bound of a census."""
    report = cheb_scan(q, 1, d, n, seed=0)
    assert sum(report.tallies.values()) + report.non_squarefree == q**d
    assert all(p.degree == d**n for p in report.tallies)
    assert report.unsupported == []
    assert report.max_deviation <= 8 * d**n
    assert report.violations == []


def test_cheb_scan_workers() -> None:
    """Test for censuses that do not depend on the worker count."""
    serial = cheb_scan(5, 1, 3, 1, seed=2, workers=1)
    parallel = cheb_scan(5, 1, 3, 1, seed=2, workers=2)
    assert serial == parallel


def test_cheb_scan_invalid() -> None:
    """Test for forbidden and invalid parameters."""
    with pytest.raises(ForbiddenParametersError):
        cheb_scan(4, 1, 2, 1)
    with pytest.raises(ValueError):
        cheb_scan(5, 0, 2, 1)
    with pytest.raises(ValueError):
        cheb_scan(5, 5, 2, 1)
    with pytest.raises(ValueError):
        cheb_scan(5, 1, 1, 1)
    with use_caps(scan_size=10):
        with pytest.raises(CapExceededError):
            cheb_scan(5, 1, 2, 1)


def test_frob_sample_example() -> None:
    """Test for the census of x^2 + 1 - alpha over GF(5)."""
    x = Poly.x(field_make(5))
    report = frob_sample(x**2 + 1, 1)
    assert report.exhaustive
    assert report.alpha_count == 5
    assert report.q == 5
    assert report.tallies == {_p("1^2"): 2, _p("2^1"): 2}
    assert report.skipped == 1
    assert report.expected(_p("1^2")) == Fraction(5, 2)


def test_frob_sample_sampled() -> None:
    """Test for reproducible sampled censuses."""
    x = Poly.x(field_make(7))
    f = x**2 + 3 * x + 1
    report = frob_sample(f, 2, samples=50, seed=3)
    assert not report.exhaustive
    assert report.alpha_count == 50
    assert sum(report.tallies.values()) + report.skipped == 50
    assert report == frob_sample(f, 2, samples=50, seed=3)
    assert report.max_deviation() >= 0


def test_frob_sample_invalid() -> None:
    """Test for invalid census inputs."""
    with pytest.raises(UnsupportedFieldError):
        frob_sample(Poly.x(QQ) ** 2, 1)
    with pytest.raises(ValueError):
        frob_sample(Poly.x(field_make(5)) + 1, 1)


def _members_of_H(q: int, n: int, count: int) -> list[Poly]:
    x = Poly.x(field_of_order(q))
    members = []
    for c in range(1, q):
        f = x**2 + c
        if is_in_H(f, n).overall:
            members.append(f)
        if len(members) == count:
            break
    return members


@pytest.mark.parametrize("q", [101, 251, 503])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_frob_sample_convergence(q: int, n: int) -> None:
    """Test for pattern counts of f^n - alpha within 5 d^n sqrt(q) of q rho."""
    members = _members_of_H(q, n, 3)
    assert len(members) == 3
    support = pattern_distribution(2, n).entries
    for f in members:
        report = frob_sample(f, n)
        assert report.alpha_count == q
        assert sum(report.tallies.values()) + report.skipped == q
        for pattern in support:
            deviation = abs(report.tallies.get(pattern, 0) - report.expected(pattern))
            assert deviation <= 5 * 2**n * q**0.5, (str(f), str(pattern))
