"""Random-variable models carrying exact rational moment sequences.

Each distribution knows its raw moments E[Y**m] as closed-form rationals;
no sampling or floating point is involved here. The text grammar used by
the CLI is ``point:c``, ``bernoulli:p``, ``poisson:a``, ``gamma:a,b`` and
``discrete:v1=w1,v2=w2,...`` with every number an integer or p/q.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction

from .combinat import stirling2
from .rational import as_rational, format_rational, parse_rational


class DistributionSpecError(ValueError):
    """Raised when a distribution spec string cannot be parsed or validated."""


class Distribution(ABC):
    """A random variable given by its exact raw moment sequence."""

    @abstractmethod
    def moment_formula(self, m: int) -> Fraction:
        """E[Y**m] from the closed form; m >= 0, uncached and unhooked."""

    @abstractmethod
    def spec_string(self) -> str:
        """Canonical text form, re-parseable by parse_distribution."""

    def __str__(self) -> str:
        return self.spec_string()


@dataclass(frozen=True)
class PointMass(Distribution):
    """Y = c with probability 1."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", as_rational(self.value))

    def moment_formula(self, m: int) -> Fraction:
        return self.value**m

    def spec_string(self) -> str:
        return f"point:{format_rational(self.value)}"


@dataclass(frozen=True)
class Bernoulli(Distribution):
    """Y in {0, 1} with P(Y=1) = p."""

    p: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p", as_rational(self.p))
        if not 0 <= self.p <= 1:
            raise DistributionSpecError(
                f"bernoulli parameter must lie in [0, 1], got {self.p}"
            )

    def moment_formula(self, m: int) -> Fraction:
        return Fraction(1) if m == 0 else self.p

    def spec_string(self) -> str:
        return f"bernoulli:{format_rational(self.p)}"


@dataclass(frozen=True)
class Poisson(Distribution):
    """Poisson with mean alpha > 0; moments via Stirling numbers."""

    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        if self.alpha <= 0:
            raise DistributionSpecError(
                f"poisson parameter must be > 0, got {self.alpha}"
            )

    def moment_formula(self, m: int) -> Fraction:
        return sum(
            (stirling2(m, k) * self.alpha**k for k in range(1, m + 1)),
            start=Fraction(1 if m == 0 else 0),
        )

    def spec_string(self) -> str:
        return f"poisson:{format_rational(self.alpha)}"


@dataclass(frozen=True)
class Gamma(Distribution):
    """Gamma with shape alpha > 0 and rate beta > 0; E[Y] = alpha/beta."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "beta", as_rational(self.beta))
        if self.alpha <= 0 or self.beta <= 0:
            raise DistributionSpecError(
                f"gamma parameters must be > 0, got {self.alpha},{self.beta}"
            )

    def moment_formula(self, m: int) -> Fraction:
        rising = Fraction(1)
        for j in range(m):
            rising *= self.alpha + j
        return rising / self.beta**m

    def spec_string(self) -> str:
        return f"gamma:{format_rational(self.alpha)},{format_rational(self.beta)}"


@dataclass(frozen=True)
class FiniteDiscrete(Distribution):
    """Finite support: atoms ((value, weight), ...) with weights summing to 1."""

    atoms: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        atoms = tuple(
            (as_rational(v), as_rational(w)) for v, w in self.atoms
        )
        object.__setattr__(self, "atoms", atoms)
        if not atoms:
            raise DistributionSpecError("discrete distribution needs at least one atom")
        if any(w <= 0 for _, w in atoms):
            raise DistributionSpecError("discrete weights must be > 0")
        if sum(w for _, w in atoms) != 1:
            raise DistributionSpecError("discrete weights must sum to 1")
        values = [v for v, _ in atoms]
        if len(set(values)) != len(values):
            raise DistributionSpecError("discrete values must be distinct")

    def moment_formula(self, m: int) -> Fraction:
        return sum((w * v**m for v, w in self.atoms), start=Fraction(0))

    def spec_string(self) -> str:
        body = ",".join(
            f"{format_rational(v)}={format_rational(w)}" for v, w in self.atoms
        )
        return f"discrete:{body}"


def _parse_number(token: str, spec: str) -> Fraction:
    try:
        return parse_rational(token)
    except ValueError:
        raise DistributionSpecError(
            f"invalid distribution spec {spec!r}: bad rational {token!r}"
        ) from None


def parse_distribution(spec: str) -> Distribution:
    """Parse the distribution grammar; raises DistributionSpecError on bad input."""
    head, sep, body = spec.partition(":")
    head = head.strip().lower()
    if not sep:
        raise DistributionSpecError(
            f"invalid distribution spec {spec!r}: expected 'kind:params'"
        )
    if head == "point":
        return PointMass(_parse_number(body, spec))
    if head == "bernoulli":
        return Bernoulli(_parse_number(body, spec))
    if head == "poisson":
        return Poisson(_parse_number(body, spec))
    if head == "gamma":
        parts = body.split(",")
        if len(parts) != 2:
            raise DistributionSpecError(
                f"invalid distribution spec {spec!r}: gamma needs 'a,b'"
            )
        return Gamma(_parse_number(parts[0], spec), _parse_number(parts[1], spec))
    if head == "discrete":
        atoms = []
        for pair in body.split(","):
            v, sep2, w = pair.partition("=")
            if not sep2:
                raise DistributionSpecError(
                    f"invalid distribution spec {spec!r}: bad atom {pair!r}"
                )
            atoms.append((_parse_number(v, spec), _parse_number(w, spec)))
        return FiniteDiscrete(tuple(atoms))
    raise DistributionSpecError(
        f"invalid distribution spec {spec!r}: unknown kind {head!r}"
    )
