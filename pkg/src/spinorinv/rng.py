"""Seeded random number generation.

All randomness in the package flows through :func:`make_rng` so that every
report can name the generator and seed that produced it.  The generator is
Philox (counter-based, 64-bit words), which is bit-reproducible across
platforms and safe to split by seed.
"""
from __future__ import annotations

import numpy as np

RNG_ALGORITHM = "Philox4x64-10"


def make_rng(seed) -> np.random.Generator:
    """Return a Generator for ``seed``; pass Generators through unchanged."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.Philox(seed))
