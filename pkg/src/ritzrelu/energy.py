"""Deep Ritz energy, its parameter gradient under three engines, and the MSE fit objective."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import _kernels
from .network import (
    Params,
    RitzNet,
    delta_events,
    distance,
    forward,
    mixed_grad_smooth,
    param_grad,
    spatial_grad,
)
from .quadrature import Grid, delta_stencil, integrate

ENGINE_MODES = ("ad", "exact", "fd")
KINK_LIMITS = ("average", "grid")


def _one(x):
    return np.ones_like(np.asarray(x, dtype=np.float64))


@dataclass(frozen=True, eq=False)
class Problem:
    """``-(kappa u')' = b`` on [0, 1] with homogeneous Dirichlet ends.

    ``kappa`` and ``source`` are vectorised callables; samples are cached per grid.
    """

    kappa: Callable = _one
    source: Callable = lambda x: 100.0 * np.sin(3.0 * np.pi * np.asarray(x))
    exact_solution: Callable | None = None
    exact_energy: float | None = None
    _cache: dict = field(default_factory=dict, init=False, repr=False)

    def sample(self, grid: Grid) -> tuple[np.ndarray, np.ndarray]:
        key = id(grid)
        hit = self._cache.get(key)
        if hit is None or hit[0] is not grid:
            kappa = np.ascontiguousarray(np.broadcast_to(self.kappa(grid.points), grid.points.shape), dtype=np.float64)
            if np.any(kappa <= 0.0):
                raise ValueError("kappa must be positive on [0, 1]")
            b = np.ascontiguousarray(self.source(grid.points), dtype=np.float64)
            hit = (grid, kappa, b)
            self._cache[key] = hit
        return hit[1], hit[2]


def sine_problem(k: int = 3, amplitude: float = 100.0) -> Problem:
    """kappa = 1, b = amplitude sin(k pi x); exact solution amplitude/(k pi)^2 sin(k pi x)."""
    a = amplitude / (k * k * np.pi ** 2)
    return Problem(
        kappa=_one,
        source=lambda x: amplitude * np.sin(k * np.pi * np.asarray(x)),
        exact_solution=lambda x: a * np.sin(k * np.pi * np.asarray(x)),
        # 1/4 a^2 (k pi)^2 - amplitude a / 2
        exact_energy=-0.25 * amplitude * a,
    )


@dataclass(frozen=True)
class GradientEngine:
    """``ad`` drops ReLU delta terms, ``exact`` adds them back, ``fd`` central-differences the energy.

    ``kink_limit`` picks the value of ``kappa du/dx`` multiplying a delta:
    the mean of the one-sided limits at the stencil point ("average") or the
    plain grid value there ("grid").
    """

    mode: str = "ad"
    fd_step: float = 1e-3
    kink_limit: str = "average"

    def __post_init__(self):
        if self.mode not in ENGINE_MODES:
            raise ValueError(f"unknown engine mode {self.mode!r}; choose from {ENGINE_MODES}")
        if self.mode == "fd" and not self.fd_step > 0.0:
            raise ValueError("fd_step must be positive")
        if self.kink_limit not in KINK_LIMITS:
            raise ValueError(f"kink_limit must be one of {KINK_LIMITS}")


def energy(problem: Problem, net: RitzNet, p: Params, grid: Grid) -> float:
    kappa, b = problem.sample(grid)
    return float(_kernels.energy_kernel(p.flat(), grid.points, grid.weight, kappa, b, net.activation.code))


def energy_batch(problem: Problem, net: RitzNet, thetas: np.ndarray, grid: Grid) -> np.ndarray:
    """Energies of many flat parameter vectors (rows of ``thetas``)."""
    kappa, b = problem.sample(grid)
    thetas = np.ascontiguousarray(np.atleast_2d(thetas), dtype=np.float64)
    return _kernels.energy_batch_kernel(thetas, grid.points, grid.weight, kappa, b, net.activation.code)


def field_energy(problem: Problem, grid: Grid, u, du_dx) -> float:
    """Quadrature energy of a field given by its samples and derivative samples."""
    kappa, b = problem.sample(grid)
    u = np.asarray(u, dtype=np.float64)
    du_dx = np.asarray(du_dx, dtype=np.float64)
    return float(integrate(grid, 0.5 * kappa * du_dx * du_dx - b * u))


def energy_density(problem: Problem, net: RitzNet, p: Params, grid: Grid) -> np.ndarray:
    kappa, b = problem.sample(grid)
    ux = spatial_grad(net, p, grid.points)
    return 0.5 * kappa * ux * ux - b * forward(net, p, grid.points)


def delta_correction(problem: Problem, net: RitzNet, p: Params, grid: Grid, kink_limit: str = "average") -> np.ndarray:
    """Gradient terms that come from the Dirac delta in R''; zero for smooth activations."""
    out = np.zeros(3 * p.width)
    events = delta_events(net, p)
    if not events:
        return out
    kappa, _ = problem.sample(grid)
    ux = spatial_grad(net, p, grid.points)
    n = p.width
    for ev in events:
        st = delta_stencil(grid, ev.location)
        k = st.hit_index
        cof = ux[k]
        if kink_limit == "average":
            # du/dx jumps by t3 sin(pi x) t1 across the kink; take the midpoint of the jump
            i = ev.neuron_index
            xk = grid.points[k]
            z = p.theta1[i] * xk + p.theta2[i]
            jump = p.theta3[i] * distance(xk) * p.theta1[i]
            cof = cof - jump * (1.0 if z > 0.0 else 0.0) + 0.5 * jump
        # dx * (1/dx) from the stencil, times the change-of-variables scale
        w = grid.weight * st.amplitude * kappa[k] * cof * ev.jacobian_scale
        out[ev.neuron_index] += w * ev.coefficient_theta1
        out[n + ev.neuron_index] += w * ev.coefficient_theta2
    return out


def energy_grad(problem: Problem, net: RitzNet, p: Params, grid: Grid, engine: GradientEngine | str = "ad") -> np.ndarray:
    if isinstance(engine, str):
        engine = GradientEngine(engine)
    if engine.mode == "fd":
        kappa, b = problem.sample(grid)
        return _kernels.fd_grad_kernel(p.flat(), grid.points, grid.weight, kappa, b, net.activation.code, engine.fd_step)
    kappa, b = problem.sample(grid)
    x = grid.points
    ux = spatial_grad(net, p, x)
    integrand = (kappa * ux)[:, None] * mixed_grad_smooth(net, p, x) - b[:, None] * param_grad(net, p, x)
    g = integrate(grid, integrand)
    if engine.mode == "exact":
        g = g + delta_correction(problem, net, p, grid, engine.kink_limit)
    return g


def _target_values(target, grid: Grid) -> np.ndarray:
    if callable(target):
        return np.asarray(target(grid.points), dtype=np.float64)
    t = np.asarray(target, dtype=np.float64)
    if t.shape != grid.points.shape:
        raise ValueError(f"target has shape {t.shape}, grid has {grid.points.shape}")
    return t


def mse_loss(net: RitzNet, p: Params, grid: Grid, target) -> float:
    r = _target_values(target, grid) - forward(net, p, grid.points)
    return float(integrate(grid, 0.5 * r * r))


def mse_grad(net: RitzNet, p: Params, grid: Grid, target) -> np.ndarray:
    r = _target_values(target, grid) - forward(net, p, grid.points)
    return integrate(grid, -r[:, None] * param_grad(net, p, grid.points))


def fd_gradient(fun: Callable[[np.ndarray], float], theta: np.ndarray, h: float = 1e-3) -> np.ndarray:
    """Plain central differences of any scalar function of a flat vector."""
    theta = np.array(theta, dtype=np.float64)
    g = np.empty_like(theta)
    for i in range(theta.shape[0]):
        old = theta[i]
        theta[i] = old + h
        fp = fun(theta)
        theta[i] = old - h
        fm = fun(theta)
        theta[i] = old
        g[i] = (fp - fm) / (2.0 * h)
    return g
