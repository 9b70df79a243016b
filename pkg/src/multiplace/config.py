"""Runtime knobs, bundled so experiments can pin them explicitly."""

from __future__ import annotations

import os
from dataclasses import dataclass

PRECISION_CAP_ENV = "MULTIPLACE_PRECISION_CAP"


@dataclass(frozen=True)
class Settings:
    """Caps and starting values for the exact/local computations.

    degree_cap: largest splitting-field degree that will be constructed.
    precision_start: initial number of p-adic digits for branch data.
    precision_cap: hard ceiling for the doubling retry loop.
    sample_max_steps: step budget for a single sampled chain run.
    """

    degree_cap: int = 24
    precision_start: int = 10
    precision_cap: int = 640
    sample_max_steps: int = 64

    def __post_init__(self):
        if self.degree_cap < 1 or self.precision_start < 1:
            raise ValueError("caps must be positive")
        if self.precision_cap < self.precision_start:
            raise ValueError("precision cap below starting precision")


def default_settings() -> Settings:
    """Settings with the precision cap optionally overridden by environment."""
    cap = os.environ.get(PRECISION_CAP_ENV)
    if cap is None:
        return Settings()
    return Settings(precision_cap=max(int(cap), 1))
