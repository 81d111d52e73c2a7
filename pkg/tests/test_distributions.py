"""Moment providers: closed-form moments and the spec-string grammar."""

from fractions import Fraction

import pytest

from fubini.distributions import (
    Bernoulli,
    DistributionSpecError,
    FiniteDiscrete,
    Gamma,
    PointMass,
    Poisson,
    parse_distribution,
)
from fubini.probabilistic import raw_moment

F = Fraction


def test_point_mass_moments():
    d = PointMass(F(5, 2))
    assert raw_moment(d, 0) == 1
    assert raw_moment(d, 3) == F(125, 8)


def test_bernoulli_moments():
    d = Bernoulli(F(2, 5))
    assert raw_moment(d, 0) == 1
    for m in range(1, 9):
        assert raw_moment(d, m) == F(2, 5)
    assert raw_moment(Bernoulli(F(2, 5)), 7) == F(2, 5)


def test_poisson_moments():
    assert raw_moment(Poisson(2), 2) == 6
    assert raw_moment(Poisson(F(3, 2)), 1) == F(3, 2)
    # E[Y^3] = a + 3a^2 + a^3 via Touchard
    a = F(3, 2)
    assert raw_moment(Poisson(a), 3) == a + 3 * a**2 + a**3


def test_gamma_moments():
    assert raw_moment(Gamma(1, 1), 3) == 6
    # rising factorial over rate power
    d = Gamma(F(3, 2), F(2))
    assert raw_moment(d, 2) == F(3, 2) * F(5, 2) / 4


def test_finite_discrete_moments():
    d = FiniteDiscrete(((F(0), F(1, 6)), (F(1), F(1, 2)), (F(3), F(1, 3))))
    assert raw_moment(d, 0) == 1
    assert raw_moment(d, 1) == F(3, 2)
    assert raw_moment(d, 2) == F(7, 2)


def test_domain_validation():
    with pytest.raises(DistributionSpecError):
        Bernoulli(F(6, 5))
    with pytest.raises(DistributionSpecError):
        Bernoulli(F(-1, 5))
    Bernoulli(0)
    Bernoulli(1)
    with pytest.raises(DistributionSpecError):
        Poisson(0)
    with pytest.raises(DistributionSpecError):
        Gamma(0, 1)
    with pytest.raises(DistributionSpecError):
        Gamma(1, 0)
    with pytest.raises(DistributionSpecError):
        FiniteDiscrete(())
    with pytest.raises(DistributionSpecError):
        FiniteDiscrete(((F(1), F(1, 2)), (F(2), F(1, 3))))  # weights not 1
    with pytest.raises(DistributionSpecError):
        FiniteDiscrete(((F(1), F(1, 2)), (F(1), F(1, 2))))  # repeated value
    with pytest.raises(DistributionSpecError):
        FiniteDiscrete(((F(1), F(3, 2)), (F(2), F(-1, 2))))  # negative weight


def test_float_parameters_rejected():
    with pytest.raises(TypeError):
        Bernoulli(0.4)
    with pytest.raises(TypeError):
        Gamma(1.0, 1)


@pytest.mark.parametrize(
    "spec",
    [
        "point:5/2",
        "point:1",
        "bernoulli:2/5",
        "poisson:3/2",
        "gamma:1,1",
        "gamma:3/2,2",
        "discrete:0=1/6,1=1/2,3=1/3",
    ],
)
def test_spec_string_roundtrip(spec):
    d = parse_distribution(spec)
    assert d.spec_string() == spec
    assert parse_distribution(d.spec_string()) == d


def test_parse_is_case_insensitive_on_kind():
    assert parse_distribution("Bernoulli:2/5") == Bernoulli(F(2, 5))


@pytest.mark.parametrize(
    "bad",
    [
        "",
        "point",
        "point:",
        "point:1.5",
        "weird:1",
        "bernoulli:7/5",
        "poisson:0",
        "poisson:-2",
        "gamma:1",
        "gamma:1,1,1",
        "gamma:0,1",
        "discrete:",
        "discrete:1",
        "discrete:1=1/2,2=1/3",
        "discrete:1=x,2=1/2",
    ],
)
def test_parse_rejects_bad_specs(bad):
    with pytest.raises(DistributionSpecError):
        parse_distribution(bad)


def test_parse_error_names_token():
    with pytest.raises(DistributionSpecError, match="1[.]5"):
        parse_distribution("point:1.5")
    with pytest.raises(DistributionSpecError, match="weird"):
        parse_distribution("weird:1")


def test_distributions_hashable_and_frozen():
    d = Poisson(F(3, 2))
    assert hash(d) == hash(Poisson(F(3, 2)))
    with pytest.raises(Exception):
        d.alpha = F(2)
    s = {PointMass(1), PointMass(1), PointMass(F(5, 2))}
    assert len(s) == 2
