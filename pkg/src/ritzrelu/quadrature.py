"""Uniform midpoint quadrature on [0, 1] and the single-point discrete delta."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class Grid:
    """Midpoint grid ``x_i = (i - 1/2) / M`` with uniform weight ``1 / M``."""

    points: np.ndarray
    weight: float

    @property
    def count(self) -> int:
        return self.points.shape[0]

    def __post_init__(self):
        self.points.setflags(write=False)


@dataclass(frozen=True)
class DeltaStencil:
    center: float
    hit_index: int | None
    amplitude: float
    in_domain: bool
    size: int

    def values(self) -> np.ndarray:
        out = np.zeros(self.size)
        if self.in_domain:
            out[self.hit_index] = self.amplitude
        return out


def make_grid(count: int = 250) -> Grid:
    if int(count) != count or count < 2:
        raise ValueError(f"grid needs at least 2 points, got {count!r}")
    count = int(count)
    points = (np.arange(count, dtype=np.float64) + 0.5) / count
    return Grid(points=points, weight=1.0 / count)


def integrate(grid: Grid, values) -> float:
    values = np.asarray(values, dtype=np.float64)
    if values.shape[0] != grid.count:
        raise ValueError(
            f"expected {grid.count} samples along the first axis, got {values.shape[0]}"
        )
    return grid.weight * np.sum(values, axis=0)


def nearest_index(grid: Grid, center: float) -> int:
    # np.argmin returns the first minimiser, so ties go to the lower index
    return int(np.argmin(np.abs(grid.points - center)))


def delta_stencil(grid: Grid, center: float) -> DeltaStencil:
    """Discrete delta: amplitude ``1/dx`` at the grid point nearest ``center``.

    Centers outside [0, 1] give an all-zero stencil.
    """
    center = float(center)
    if not (0.0 <= center <= 1.0):
        return DeltaStencil(center, None, 0.0, False, grid.count)
    return DeltaStencil(center, nearest_index(grid, center), 1.0 / grid.weight, True, grid.count)
