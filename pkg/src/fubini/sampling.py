"""Monte Carlo cross-checks of the exact sum-moment values.

Floats live only here. Sampling uses a counter-based generator so a
(seed, spec) pair reproduces the identical stream regardless of platform
or call order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .distributions import (
    Bernoulli,
    Distribution,
    FiniteDiscrete,
    Gamma,
    PointMass,
    Poisson,
)
from .probabilistic import sum_degenerate_moment
from .rational import as_rational

MIN_SAMPLES = 1000


@dataclass(frozen=True)
class MCResult:
    estimate: float
    stderr: float
    exact: Fraction
    zscore: float | None
    samples: int

    @property
    def suspicious(self) -> bool:
        # stderr == 0 means a deterministic statistic; nothing to flag
        return self.zscore is not None and abs(self.zscore) > 5.0

    def to_dict(self) -> dict:
        return {
            "estimate": self.estimate,
            "stderr": self.stderr,
            "exact": str(self.exact),
            "exact_float": float(self.exact),
            "zscore": self.zscore,
            "samples": self.samples,
            "suspicious": self.suspicious,
        }


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def draw(dist: Distribution, size: int, seed: int) -> np.ndarray:
    """Vector of `size` iid samples as float64."""
    rng = _rng(seed)
    if isinstance(dist, PointMass):
        return np.full(size, float(dist.value))
    if isinstance(dist, Bernoulli):
        return (rng.random(size) < float(dist.p)).astype(np.float64)
    if isinstance(dist, Poisson):
        return rng.poisson(lam=float(dist.alpha), size=size).astype(np.float64)
    if isinstance(dist, Gamma):
        return rng.gamma(
            shape=float(dist.alpha), scale=1.0 / float(dist.beta), size=size
        )
    if isinstance(dist, FiniteDiscrete):
        values = np.array([float(v) for v, _ in dist.atoms])
        weights = np.array([float(w) for _, w in dist.atoms])
        edges = np.cumsum(weights)
        idx = np.searchsorted(edges, rng.random(size), side="right")
        return values[np.minimum(idx, len(values) - 1)]
    raise TypeError(f"no sampler for distribution type {type(dist).__name__}")


def estimate_sum_moment(
    dist: Distribution, k: int, n: int, lam, samples: int, seed: int
) -> MCResult:
    """Estimate E[(Y_1 + ... + Y_k)_{n,lam}] and compare with the exact value.

    The statistic per replicate is the degenerate falling factorial of the
    k-fold sample sum; the z-score uses the sample standard error with one
    degree of freedom removed.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if n < 0:
        raise ValueError("n must be >= 0")
    if samples < MIN_SAMPLES:
        raise ValueError(f"samples must be >= {MIN_SAMPLES}")
    lam = as_rational(lam)
    exact = sum_degenerate_moment(dist, k, n, lam)

    total = np.zeros(samples)
    for j in range(k):
        # stream split: one independent substream per summand
        total += draw(dist, samples, seed * 1_000_003 + j)
    lamf = float(lam)
    stat = np.ones(samples)
    for j in range(n):
        stat = stat * (total - j * lamf)

    estimate = float(stat.mean())
    spread = float(stat.std(ddof=1)) if samples > 1 else 0.0
    stderr = spread / math.sqrt(samples)
    if stderr == 0.0:
        zscore = None
    else:
        zscore = (estimate - float(exact)) / stderr
    return MCResult(
        estimate=estimate,
        stderr=stderr,
        exact=exact,
        zscore=zscore,
        samples=samples,
    )
