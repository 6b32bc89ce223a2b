"""Pinned random number generation.

Every stochastic draw in this package comes from numpy's PCG64 bit
generator, consuming only raw uniform doubles via ``Generator.random``.
Bernoulli trials and exponential interarrivals are derived from those
uniforms by inverse CDF here, never through numpy's distribution
methods, so a seed reproduces the same stream on any platform and any
numpy release (the raw PCG64 output is frozen by numpy's compatibility
policy; distribution methods are not).

Parallel replicas and sweep points get independent streams through
``SeedSequence`` spawn keys: ``rng_for(seed, point, replica)``.

Test vectors for the pinned stream live in README.md and
tests/test_rng.py.
"""

import math

import numpy as np

GENERATOR_NAME = "pcg64"

MAX_SEED = 2**64 - 1


def make_rng(seed: int) -> np.random.Generator:
    """Root generator for a seed (equivalent to ``rng_for(seed)``)."""
    _check_seed(seed)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def rng_for(seed: int, *key: int) -> np.random.Generator:
    """Independent child stream for a (sweep point, replica, ...) key path."""
    _check_seed(seed)
    if not key:
        return make_rng(seed)
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(seed, spawn_key=tuple(key)))
    )


def bernoulli(rng: np.random.Generator, p: float) -> bool:
    """One Bernoulli(p) trial from a single raw uniform."""
    return rng.random() < p


def exponential(rng: np.random.Generator, rate: float) -> float:
    """One Exp(rate) draw by inverse CDF from a single raw uniform."""
    # -log1p(-u) maps u in [0, 1) to [0, inf) without catastrophic
    # cancellation near u = 1.
    return -math.log1p(-rng.random()) / rate


def _check_seed(seed: int) -> None:
    if not isinstance(seed, (int, np.integer)) or isinstance(seed, bool):
        raise ValueError(f"seed must be an integer, got {seed!r}")
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
