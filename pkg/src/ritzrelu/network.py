"""Single-hidden-layer network ``u(x) = sum_i t3_i sin(pi x) R(t1_i x + t2_i)``.

Every derivative here is written out by hand. All functions accept a scalar
``x`` or a 1-D array of abscissae; gradients w.r.t. the parameters come back
with the flattened ``[t1; t2; t3]`` ordering on the last axis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .activation import Activation, act_d1, act_d2_smooth, act_value, get_activation, kink_location


@dataclass(frozen=True, eq=False)
class Params:
    theta1: np.ndarray
    theta2: np.ndarray
    theta3: np.ndarray

    def __post_init__(self):
        for name in ("theta1", "theta2", "theta3"):
            object.__setattr__(self, name, np.array(getattr(self, name), dtype=np.float64).ravel())
        n = self.theta1.shape[0]
        if n < 1 or self.theta2.shape[0] != n or self.theta3.shape[0] != n:
            raise ValueError("theta1, theta2, theta3 must share a length N >= 1")

    @property
    def width(self) -> int:
        return self.theta1.shape[0]

    def flat(self) -> np.ndarray:
        return np.concatenate([self.theta1, self.theta2, self.theta3])

    @classmethod
    def from_flat(cls, vec) -> "Params":
        vec = np.asarray(vec, dtype=np.float64)
        if vec.ndim != 1 or vec.shape[0] % 3 or vec.shape[0] == 0:
            raise ValueError(f"flat parameter vector must have length 3N, got {vec.shape}")
        t1, t2, t3 = np.split(vec, 3)
        return cls(t1, t2, t3)

    def copy(self) -> "Params":
        return Params(self.theta1.copy(), self.theta2.copy(), self.theta3.copy())


@dataclass(frozen=True)
class RitzNet:
    width: int = 50
    activation: Activation = get_activation("tanh")

    def __post_init__(self):
        object.__setattr__(self, "activation", get_activation(self.activation))
        if self.width < 1:
            raise ValueError("width must be >= 1")


@dataclass(frozen=True)
class DeltaEvent:
    neuron_index: int
    location: float
    jacobian_scale: float
    coefficient_theta1: float
    coefficient_theta2: float


def init_params(width: int, seed: int | np.random.Generator = 0) -> Params:
    """Fan-in scaled uniform draw on [-1/sqrt(N), 1/sqrt(N)] for all three blocks."""
    rng = np.random.default_rng(seed)
    bound = 1.0 / np.sqrt(width)
    t = rng.uniform(-bound, bound, size=(3, width))
    return Params(t[0], t[1], t[2])


def distance(x):
    """sin(pi x), folded so both endpoints give exactly 0."""
    x = np.asarray(x, dtype=np.float64)
    return np.sin(np.pi * np.minimum(x, 1.0 - x))


def _pre(p: Params, x):
    x = np.asarray(x, dtype=np.float64)
    scalar = x.ndim == 0
    xs = np.atleast_1d(x)[:, None]
    z = p.theta1[None, :] * xs + p.theta2[None, :]
    return scalar, xs, z, distance(xs), np.pi * np.cos(np.pi * xs)


def forward(net: RitzNet, p: Params, x):
    scalar, _, z, s, _ = _pre(p, x)
    u = s[:, 0] * (act_value(net.activation, z) @ p.theta3)
    return u[0] if scalar else u


def spatial_grad(net: RitzNet, p: Params, x):
    scalar, _, z, s, c = _pre(p, x)
    a = net.activation
    terms = c * act_value(a, z) + s * act_d1(a, z) * p.theta1
    du = terms @ p.theta3
    return du[0] if scalar else du


def param_grad(net: RitzNet, p: Params, x):
    scalar, xs, z, s, _ = _pre(p, x)
    a = net.activation
    r1 = act_d1(a, z)
    g2 = p.theta3 * s * r1
    out = np.concatenate([g2 * xs, g2, s * act_value(a, z)], axis=1)
    return out[0] if scalar else out


def mixed_grad_smooth(net: RitzNet, p: Params, x):
    """d^2u / dx dtheta with the classical second derivative of the activation.

    For ReLU the delta terms are left out, which is what reverse-mode autodiff
    produces.
    """
    scalar, xs, z, s, c = _pre(p, x)
    a = net.activation
    r0, r1, r2 = act_value(a, z), act_d1(a, z), act_d2_smooth(a, z)
    t1, t3 = p.theta1, p.theta3
    g2 = t3 * (c * r1 + s * t1 * r2)
    g1 = g2 * xs + t3 * s * r1
    g3 = c * r0 + s * t1 * r1
    out = np.concatenate([g1, g2, g3], axis=1)
    return out[0] if scalar else out


def delta_events(net: RitzNet, p: Params) -> list[DeltaEvent]:
    """Delta terms of the mixed derivative, one per neuron whose kink lies in [0, 1].

    Uses ``delta(t1 x + t2) = delta(x - xk) / |t1|``.
    """
    events = []
    for i in range(p.width):
        t1 = float(p.theta1[i])
        xk = kink_location(net.activation, t1, float(p.theta2[i]))
        if xk is None or not (0.0 <= xk <= 1.0):
            continue
        pref = p.theta3[i] * distance(xk) * t1
        events.append(DeltaEvent(i, xk, 1.0 / abs(t1), float(pref * xk), float(pref)))
    return events
