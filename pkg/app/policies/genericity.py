"""
Genericity sampling policy.

Generic values on an irreducible component (epsilon_i, stability, the
orbit of a restriction) are read off random exact points. Corank is
upper-semicontinuous, so the minimum over a few samples with entries in
[-ENTRY_BOUND, ENTRY_BOUND] is the generic value except with probability
bounded by Schwartz-Zippel on the rank minors. Paranoid mode multiplies
both the sample count and the entry range by PARANOID_FACTOR.

Every draw gets its own numpy Generator seeded from (seed, purpose, key),
so a result never depends on the order in which components are visited.

Example:
    >>> get_policy(paranoid=True).samples
    50
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from app.types.errors import DomainError

SAMPLE_COUNT = 5
ENTRY_BOUND = 1000
PARANOID_FACTOR = 10
MAX_GENERIC_ATTEMPTS = 20

PURPOSES = {
    "epsilon": 1,
    "emax": 2,
    "stability": 3,
    "conjugation": 4,
    "spot-check": 5,
}


@dataclass(frozen=True)
class SamplingPolicy:
    samples: int
    bound: int
    max_attempts: int = MAX_GENERIC_ATTEMPTS


def get_policy(paranoid: bool = False) -> SamplingPolicy:
    """
    Determine the sampling policy.

    Args:
        paranoid: Raise the sample count and entry range by PARANOID_FACTOR.

    Returns:
        A SamplingPolicy.
    """
    factor = PARANOID_FACTOR if paranoid else 1
    return SamplingPolicy(samples=SAMPLE_COUNT * factor, bound=ENTRY_BOUND * factor)


@dataclass(frozen=True)
class GenericitySampler:
    """The single seeded source of randomness handed to binf and blambda."""
    policy: SamplingPolicy
    seed: int = 0

    def __post_init__(self):
        if self.seed < 0:
            raise DomainError(f"seed must be non-negative, got {self.seed}")

    @classmethod
    def create(cls, seed: int = 0, paranoid: bool = False) -> "GenericitySampler":
        return cls(policy=get_policy(paranoid), seed=seed)

    def rng_for(self, purpose: str, key: Sequence[int], attempt: int = 0) -> np.random.Generator:
        if purpose not in PURPOSES:
            raise DomainError(f"unknown sampling purpose {purpose!r}")
        key = [int(k) for k in key]
        # the length keeps [k] and [k, 0] apart; SeedSequence zero-pads short entropy
        entropy = [self.seed, PURPOSES[purpose], attempt, len(key), *key]
        return np.random.default_rng(entropy)

    def coefficients(self, rng: np.random.Generator, count: int) -> list[int]:
        bound = self.policy.bound
        return [int(c) for c in rng.integers(-bound, bound + 1, size=count)]

    def with_samples(self, samples: int) -> "GenericitySampler":
        return GenericitySampler(
            policy=SamplingPolicy(samples=samples, bound=self.policy.bound,
                                  max_attempts=self.policy.max_attempts),
            seed=self.seed,
        )
