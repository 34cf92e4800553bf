"""Deterministic sampling grids on the exterior disk."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidPlan


@dataclass(frozen=True)
class SamplingPlan:
    """Grid specification: geometric radii in [r_min, r_max] crossed with
    uniform angles, plus local-refinement bookkeeping."""

    r_min: float = 1.0 + 1e-3
    r_max: float = 50.0
    radial_count: int = 64
    angular_count: int = 128
    refine_depth: int = 2
    refine_factor: int = 4

    def __post_init__(self):
        if not (1.0 < self.r_min < self.r_max < np.inf):
            raise InvalidPlan(
                f"need 1 < r_min < r_max < inf, got ({self.r_min}, {self.r_max})"
            )
        if self.radial_count < 1 or self.angular_count < 1:
            raise InvalidPlan("radial_count and angular_count must be positive")
        if self.refine_depth < 0:
            raise InvalidPlan("refine_depth must be nonnegative")
        if self.refine_factor < 1:
            raise InvalidPlan("refine_factor must be a positive integer")

    def radii(self) -> np.ndarray:
        if self.radial_count == 1:
            return np.array([self.r_min])
        return np.geomspace(self.r_min, self.r_max, self.radial_count)

    def angles(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.angular_count) / self.angular_count


def sample_exterior(plan: SamplingPlan) -> np.ndarray:
    """Ordered grid points: radius-major, then angle."""
    radii = plan.radii()
    angles = plan.angles()
    unit = np.exp(1j * angles)
    return (radii[:, None] * unit[None, :]).ravel()


def circle_points(radius: float, count: int) -> np.ndarray:
    angles = 2.0 * np.pi * np.arange(count) / count
    return radius * np.exp(1j * angles)
