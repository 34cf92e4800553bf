"""Independent ground-truth machinery: brute-force injectivity scanning,
discrete winding numbers, and finite-difference derivative oracles.

Nothing here reuses the jet code paths it is meant to check: derivatives come
from plain central differences and injectivity from direct image comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import (
    EvaluationFailure,
    OpenContour,
    PointTooCloseToContour,
    StencilLeavesDomain,
)
from .jet import ComplexJet
from .sampling import SamplingPlan, sample_exterior

TOLERANCE_SCALE = 1e-9  # collision tolerance as a fraction of image spacing
SEPARATION_SPACINGS = 2.0  # separation floor in units of domain grid spacing


@dataclass(frozen=True)
class Collision:
    z1: complex
    z2: complex
    image_distance: float
    domain_distance: float


@dataclass(frozen=True)
class CollisionReport:
    """All grid pairs mapped within tolerance of each other while separated in
    the domain. Empty means injective on the sampled grid at the stated
    tolerances; it claims nothing beyond the grid."""

    collisions: tuple
    grid_size: int
    collision_tolerance: float
    separation_floor: float

    def to_json_dict(self) -> dict:
        return {
            "collisions": [
                {
                    "z1": {"re": c.z1.real, "im": c.z1.imag},
                    "z2": {"re": c.z2.real, "im": c.z2.imag},
                    "image_distance": c.image_distance,
                    "domain_distance": c.domain_distance,
                }
                for c in self.collisions
            ],
            "grid_size": self.grid_size,
            "collision_tolerance": self.collision_tolerance,
            "separation_floor": self.separation_floor,
        }


def _median_neighbor_spacing(grid: np.ndarray, plan: SamplingPlan) -> float:
    """Median distance between grid-adjacent samples (angular and radial)."""
    mesh = grid.reshape(plan.radial_count, plan.angular_count)
    gaps = [np.abs(mesh - np.roll(mesh, 1, axis=1)).ravel()]
    if plan.radial_count > 1:
        gaps.append(np.abs(mesh[1:] - mesh[:-1]).ravel())
    return float(np.median(np.concatenate(gaps)))


def _pair_key(z1: complex, z2: complex):
    a = (z1.real, z1.imag)
    b = (z2.real, z2.imag)
    return (a, b) if a <= b else (b, a)


def injectivity_scan(
    f,
    plan: SamplingPlan,
    collision_tolerance: "float | None" = None,
    separation_floor: "float | None" = None,
    pairwise: bool = False,
) -> CollisionReport:
    """Evaluate f on the plan grid and report all near-coincident image pairs
    whose preimages are genuinely separated.

    Default tolerances derive from the grid itself: collision_tolerance is
    1e-9 of the median neighbor image distance (so only true collisions
    qualify) and separation_floor is two grid spacings (so neighboring
    samples never do). ``pairwise=True`` switches to the O(n^2) reference
    scan, intended for small grids as the oracle's own oracle.
    """
    points = sample_exterior(plan)
    values = f.values(points)
    if not np.all(np.isfinite(values)):
        bad = points[~np.isfinite(values)][0]
        raise EvaluationFailure(f"{f.describe()} not evaluable at grid point {bad}")

    if collision_tolerance is None:
        img_spacing = _median_neighbor_spacing(values, plan)
        collision_tolerance = TOLERANCE_SCALE * img_spacing
    if separation_floor is None:
        dom_spacing = _median_neighbor_spacing(points, plan)
        separation_floor = SEPARATION_SPACINGS * dom_spacing

    collisions = collision_pairs(
        points, values, collision_tolerance, separation_floor, pairwise
    )
    return CollisionReport(
        collisions=collisions,
        grid_size=points.shape[0],
        collision_tolerance=float(collision_tolerance),
        separation_floor=float(separation_floor),
    )


def collision_pairs(
    points: np.ndarray,
    values: np.ndarray,
    collision_tolerance: float,
    separation_floor: float,
    pairwise: bool = False,
) -> tuple:
    """Near-coincident image pairs among precomputed samples. Pairs are
    canonically ordered, so the result is independent of grid order."""
    n = points.shape[0]
    found = {}

    def consider(i, j):
        img = abs(values[i] - values[j])
        if img > collision_tolerance:
            return
        dom = abs(points[i] - points[j])
        if dom < separation_floor:
            return
        key = _pair_key(complex(points[i]), complex(points[j]))
        found.setdefault(
            key,
            Collision(
                complex(key[0][0], key[0][1]),
                complex(key[1][0], key[1][1]),
                img,
                dom,
            ),
        )

    if pairwise:
        for i in range(n):
            for j in range(i + 1, n):
                consider(i, j)
    else:
        width = max(collision_tolerance, 1e-300)
        cols = np.floor(values.real / width).astype(np.int64)
        rows = np.floor(values.imag / width).astype(np.int64)
        buckets = {}
        for i in range(n):
            buckets.setdefault((cols[i], rows[i]), []).append(i)
        for i in range(n):
            for dx in (-1, 0, 1):
                for dy in (-1, 0, 1):
                    for j in buckets.get((cols[i] + dx, rows[i] + dy), ()):
                        if j > i:
                            consider(i, j)

    return tuple(found[k] for k in sorted(found))


def winding_number(contour_samples, point: complex) -> int:
    """Winding number of a closed discrete contour around a point, from
    accumulated phase increments."""
    contour = np.asarray(contour_samples, dtype=np.complex128)
    if contour.shape[0] < 3:
        raise OpenContour("contour needs at least 3 samples")
    if abs(contour[0] - contour[-1]) > 1e-12:
        raise OpenContour(
            f"contour endpoints differ by {abs(contour[0] - contour[-1])}"
        )
    point = complex(point)
    total, min_dist = _kernels.winding_sum(
        np.ascontiguousarray(contour.real),
        np.ascontiguousarray(contour.imag),
        point.real,
        point.imag,
    )
    if min_dist <= 1e-9:
        raise PointTooCloseToContour(
            f"point {point} within {min_dist} of the contour"
        )
    turns = total / (2.0 * np.pi)
    nearest = round(turns)
    if abs(turns - nearest) >= 0.1:
        raise PointTooCloseToContour(
            f"phase sum {turns} turns is not near an integer"
        )
    return int(nearest)


def fd_derivatives(f, zeta: complex, step: float = 1e-3) -> ComplexJet:
    """Second-order central-difference estimates of f, f', f'', f''' using
    the stencil zeta + {0, +-step, +-2 step} along the real axis."""
    zeta = complex(zeta)
    offsets = np.array([-2.0, -1.0, 0.0, 1.0, 2.0]) * step
    stencil = zeta + offsets
    if np.any(np.abs(stencil) <= 1.0):
        raise StencilLeavesDomain(
            f"stencil around {zeta} with step {step} leaves the exterior disk"
        )
    vm2, vm1, v0, vp1, vp2 = f.values(stencil)
    d1 = (vp1 - vm1) / (2.0 * step)
    d2 = (vp1 - 2.0 * v0 + vm1) / (step * step)
    d3 = (vp2 - 2.0 * vp1 + 2.0 * vm1 - vm2) / (2.0 * step**3)
    return ComplexJet(complex(v0), complex(d1), complex(d2), complex(d3))
