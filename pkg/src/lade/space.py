"""Normalized search space: mapping between raw box domains and the unit cube.

All algorithm-internal geometry (ranges, radii, region half-widths) lives in
unit-cube coordinates; fitness functions are always evaluated on raw
coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SearchSpace:
    """Axis-aligned box domain with strictly positive edge lengths."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if lower.ndim != 1 or lower.shape != upper.shape:
            raise ValueError("lower and upper must be 1-D and equally sized")
        if lower.size < 1:
            raise ValueError("dimension must be at least 1")
        if not np.all(upper > lower):
            raise ValueError("upper must be strictly greater than lower per dimension")
        object.__setattr__(self, "span", upper - lower)

    @property
    def dim(self) -> int:
        return self.lower.size


def to_unit(x_raw, space: SearchSpace) -> np.ndarray:
    """Map a raw-coordinate point into [0,1]^D, clamping out-of-bound inputs."""
    x = np.asarray(x_raw, dtype=float)
    if x.shape != (space.dim,):
        raise ValueError(f"expected {space.dim} coordinates, got shape {x.shape}")
    u = (x - space.lower) / space.span
    return np.clip(u, 0.0, 1.0)


def from_unit(u, space: SearchSpace) -> np.ndarray:
    """Map a unit-cube point back to raw coordinates."""
    p = np.asarray(u, dtype=float)
    if p.shape != (space.dim,):
        raise ValueError(f"expected {space.dim} coordinates, got shape {p.shape}")
    return space.lower + p * space.span
