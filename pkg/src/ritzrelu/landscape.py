"""Hessian spectra and 2-D energy slices along Hessian eigenvectors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .energy import Problem, energy_batch
from .network import Params, RitzNet
from .quadrature import Grid

# the nine lowest-index distinct eigenvector pairs, 1-based
DEFAULT_PAIRS = ((1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4), (1, 5), (2, 5), (3, 5))

BatchFn = Callable[[np.ndarray], np.ndarray]


class LandscapeError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class HessianSpectrum:
    matrix: np.ndarray
    eigenvalues: np.ndarray  # descending
    eigenvectors: np.ndarray  # columns, paired with eigenvalues

    def residuals(self) -> np.ndarray:
        j, v = self.matrix, self.eigenvectors
        return np.linalg.norm(j @ v - v * self.eigenvalues, axis=0)

    def vector(self, i: int) -> np.ndarray:
        """Eigenvector for the i-th largest eigenvalue (1-based)."""
        return self.eigenvectors[:, i - 1]


@dataclass(frozen=True, eq=False)
class SliceSurface:
    eigen_pair: tuple[int, int] | None
    eps: np.ndarray
    values: np.ndarray
    roughness: float

    def rows(self):
        for a, e1 in enumerate(self.eps):
            for b, e2 in enumerate(self.eps):
                yield e1, e2, self.values[a, b]


def energy_objective(problem: Problem, net: RitzNet, grid: Grid) -> BatchFn:
    return lambda thetas: energy_batch(problem, net, thetas, grid)


def decompose(matrix) -> HessianSpectrum:
    j = np.asarray(matrix, dtype=np.float64)
    j = 0.5 * (j + j.T)
    w, v = np.linalg.eigh(j)
    order = np.argsort(w, kind="stable")[::-1]
    return HessianSpectrum(j, w[order], v[:, order])


def hessian_fd(fun: BatchFn, theta, h: float = 1e-3) -> HessianSpectrum:
    """Central-difference Hessian of a batched scalar function, then its spectrum.

    ``J_ab = [f(++) - f(+-) - f(-+) + f(--)] / 4h^2`` with steps ``h`` along
    coordinates a and b.
    """
    if not h > 0.0:
        raise ValueError("h must be positive")
    theta = np.asarray(theta, dtype=np.float64)
    d = theta.shape[0]
    hess = np.empty((d, d))
    signs = np.array([[1, 1], [1, -1], [-1, 1], [-1, -1]], dtype=np.float64)
    coef = np.array([1.0, -1.0, -1.0, 1.0])
    for a in range(d):
        cols = np.arange(a, d)
        pts = np.repeat(theta[None, :], 4 * cols.size, axis=0).reshape(cols.size, 4, d)
        pts[:, :, a] += h * signs[:, 0]
        pts[np.arange(cols.size), :, cols] += h * signs[:, 1]
        vals = np.asarray(fun(pts.reshape(-1, d))).reshape(cols.size, 4)
        row = vals @ coef / (4.0 * h * h)
        if not np.all(np.isfinite(row)):
            bad = cols[np.flatnonzero(~np.isfinite(row))[0]]
            raise LandscapeError(f"non-finite Hessian entry at ({a}, {bad})")
        hess[a, a:] = row
        hess[a:, a] = row
    return decompose(hess)


def eps_axis(resolution: int, half_width: float = 0.5) -> np.ndarray:
    # symmetric construction so the middle sample is exactly 0 for odd resolution
    k = np.arange(resolution, dtype=np.float64)
    return half_width * (2.0 * k - (resolution - 1)) / (resolution - 1)


def roughness(values) -> float:
    """Mean squared 5-point Laplacian (unit index spacing) over value range squared."""
    v = np.asarray(values, dtype=np.float64)
    if v.ndim != 2 or min(v.shape) < 3:
        raise ValueError("roughness needs a 2-D surface of at least 3x3 samples")
    lap = v[2:, 1:-1] + v[:-2, 1:-1] + v[1:-1, 2:] + v[1:-1, :-2] - 4.0 * v[1:-1, 1:-1]
    span = float(v.max() - v.min())
    if span == 0.0:
        return 0.0
    return float(np.mean(lap * lap) / (span * span))


def slice_surface(fun: BatchFn, center, vi, vj, resolution: int = 51, half_width: float = 0.5,
                  pair: tuple[int, int] | None = None) -> SliceSurface:
    if resolution < 3:
        raise ValueError("resolution must be >= 3")
    center = np.asarray(center, dtype=np.float64)
    eps = eps_axis(resolution, half_width)
    e1, e2 = np.meshgrid(eps, eps, indexing="ij")
    pts = center[None, :] + e1.reshape(-1, 1) * np.asarray(vi)[None, :] + e2.reshape(-1, 1) * np.asarray(vj)[None, :]
    values = np.asarray(fun(pts)).reshape(resolution, resolution)
    return SliceSurface(pair, eps, values, roughness(values))


def energy_slices(problem: Problem, net: RitzNet, center: Params, grid: Grid, spectrum: HessianSpectrum,
                  pairs=DEFAULT_PAIRS, resolution: int = 51, half_width: float = 0.5) -> list[SliceSurface]:
    fun = energy_objective(problem, net, grid)
    theta = center.flat()
    return [
        slice_surface(fun, theta, spectrum.vector(i), spectrum.vector(j), resolution, half_width, (i, j))
        for i, j in pairs
    ]
