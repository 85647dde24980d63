"""ADAM and full-batch training loops for the Deep Ritz and regression objectives."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .energy import GradientEngine, Problem, energy, energy_grad, mse_grad, mse_loss
from .network import Params, RitzNet, forward
from .quadrature import Grid, integrate

log = logging.getLogger(__name__)


class TrainingError(RuntimeError):
    pass


@dataclass
class AdamState:
    first_moment: np.ndarray
    second_moment: np.ndarray
    step_count: int = 0
    lr: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8

    @classmethod
    def zeros(cls, dim: int, lr: float = 1e-3, **kw) -> "AdamState":
        return cls(np.zeros(dim), np.zeros(dim), 0, lr, **kw)


def adam_step(state: AdamState, p: Params, grad) -> tuple[AdamState, Params]:
    """One bias-corrected ADAM update; returns fresh state and parameters."""
    grad = np.asarray(grad, dtype=np.float64)
    theta = p.flat()
    if grad.shape != theta.shape or state.first_moment.shape != theta.shape:
        raise ValueError(
            f"dimension mismatch: params {theta.shape}, grad {grad.shape}, moments {state.first_moment.shape}"
        )
    t = state.step_count + 1
    m = state.beta1 * state.first_moment + (1.0 - state.beta1) * grad
    v = state.beta2 * state.second_moment + (1.0 - state.beta2) * grad * grad
    m_hat = m / (1.0 - state.beta1 ** t)
    v_hat = v / (1.0 - state.beta2 ** t)
    theta = theta - state.lr * m_hat / (np.sqrt(v_hat) + state.eps)
    new = AdamState(m, v, t, state.lr, state.beta1, state.beta2, state.eps)
    return new, Params.from_flat(theta)


@dataclass(frozen=True)
class DeepRitz:
    problem: Problem
    engine: GradientEngine = GradientEngine("ad")

    def value(self, net, p, grid):
        return energy(self.problem, net, p, grid)

    def grad(self, net, p, grid):
        return energy_grad(self.problem, net, p, grid, self.engine)

    @property
    def reference(self):
        return self.problem.exact_solution


@dataclass(frozen=True)
class Regression:
    target: object

    def value(self, net, p, grid):
        return mse_loss(net, p, grid, self.target)

    def grad(self, net, p, grid):
        return mse_grad(net, p, grid, self.target)

    @property
    def reference(self):
        return self.target if callable(self.target) else None


@dataclass
class TrainingTrace:
    epochs: list = field(default_factory=list)
    objective: list = field(default_factory=list)
    l2_error: list = field(default_factory=list)
    linf_error: list = field(default_factory=list)
    snapshots: dict = field(default_factory=dict)
    initial: tuple | None = None
    adam_state: AdamState | None = None

    def append(self, epoch, value, l2, linf):
        self.epochs.append(epoch)
        self.objective.append(value)
        self.l2_error.append(l2)
        self.linf_error.append(linf)

    def extend(self, other: "TrainingTrace") -> None:
        offset = self.epochs[-1] if self.epochs else 0
        self.epochs.extend(e + offset for e in other.epochs)
        self.objective.extend(other.objective)
        self.l2_error.extend(other.l2_error)
        self.linf_error.extend(other.linf_error)
        self.snapshots.update({e + offset: v for e, v in other.snapshots.items()})
        self.adam_state = other.adam_state

    def rows(self):
        return list(zip(self.epochs, self.objective, self.l2_error, self.linf_error))

    def __len__(self):
        return len(self.epochs)


def error_norms(net: RitzNet, p: Params, grid: Grid, exact) -> tuple[float, float, float]:
    """(L2 error, Linf error, relative L2 error) on the quadrature grid."""
    if exact is None:
        return float("nan"), float("nan"), float("nan")
    ue = np.asarray(exact(grid.points))
    r = forward(net, p, grid.points) - ue
    l2 = float(np.sqrt(integrate(grid, r * r)))
    ref = float(np.sqrt(integrate(grid, ue * ue)))
    return l2, float(np.max(np.abs(r))), l2 / ref if ref > 0 else float("nan")


def train(objective, net: RitzNet, p0: Params, grid: Grid, epochs: int = 5000, lr: float = 1e-3,
          snapshot_every: int = 0, state: AdamState | None = None) -> tuple[Params, TrainingTrace]:
    """Full-batch ADAM.

    Record ``k`` holds the objective and errors of the parameters *after*
    ``k`` updates; the starting point is kept as ``trace.initial`` and the
    final optimizer state as ``trace.adam_state`` so a run can be resumed.
    """
    if epochs < 1:
        raise ValueError("epochs must be >= 1")
    exact = objective.reference
    p = p0
    if state is None:
        state = AdamState.zeros(3 * p.width, lr=lr)
    trace = TrainingTrace()
    value = objective.value(net, p, grid)
    trace.initial = (value, *error_norms(net, p, grid, exact)[:2])
    for epoch in range(1, epochs + 1):
        g = objective.grad(net, p, grid)
        if not np.all(np.isfinite(g)):
            bad = int(np.flatnonzero(~np.isfinite(g))[0])
            raise TrainingError(f"non-finite gradient at epoch {epoch}, coordinate {bad}")
        state, p = adam_step(state, p, g)
        value = objective.value(net, p, grid)
        if not np.isfinite(value):
            raise TrainingError(f"non-finite objective at epoch {epoch}")
        l2, linf, _ = error_norms(net, p, grid, exact)
        trace.append(epoch, value, l2, linf)
        if snapshot_every and epoch % snapshot_every == 0:
            trace.snapshots[epoch] = p.flat()
        if epoch % 1000 == 0:
            log.debug("epoch %d objective %.6g", epoch, value)
    trace.adam_state = state
    return p, trace
