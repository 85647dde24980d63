"""Scalar activations with first and (classical) second derivatives.

The ReLU second derivative is a Dirac delta at the origin. It is never
evaluated pointwise here: ``d2_smooth`` returns only the classical part and
``kink_at_zero`` tells the caller that a delta has to be accounted for.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

RELU, RELU2, TANH, SOFTPLUS = 0, 1, 2, 3


@dataclass(frozen=True)
class Activation:
    name: str
    code: int
    smoothness: str
    kink_at_zero: bool

    def value(self, z):
        return act_value(self, z)

    def d1(self, z):
        return act_d1(self, z)

    def d2_smooth(self, z):
        return act_d2_smooth(self, z)


ReLU = Activation("relu", RELU, "C0", True)
ReLUSquared = Activation("relu2", RELU2, "C1", False)
Tanh = Activation("tanh", TANH, "Cinf", False)
Softplus = Activation("softplus", SOFTPLUS, "Cinf", False)

ACTIVATIONS = {a.name: a for a in (ReLU, ReLUSquared, Tanh, Softplus)}


def get_activation(name: str | Activation) -> Activation:
    if isinstance(name, Activation):
        return name
    try:
        return ACTIVATIONS[name]
    except KeyError:
        raise ValueError(f"unknown activation {name!r}; choose from {sorted(ACTIVATIONS)}") from None


def _logistic(z):
    return 0.5 * (1.0 + np.tanh(0.5 * z))


def act_value(a: Activation, z):
    z = np.asarray(z, dtype=np.float64)
    if a.code == RELU:
        return np.maximum(z, 0.0)
    if a.code == RELU2:
        r = np.maximum(z, 0.0)
        return r * r
    if a.code == TANH:
        return np.tanh(z)
    # log(1 + e^z) without overflow
    return np.logaddexp(0.0, z)


def act_d1(a: Activation, z):
    """First derivative; ReLU uses 0 at the kink (z <= 0 maps to 0)."""
    z = np.asarray(z, dtype=np.float64)
    if a.code == RELU:
        return (z > 0.0).astype(np.float64)
    if a.code == RELU2:
        return 2.0 * np.maximum(z, 0.0)
    if a.code == TANH:
        t = np.tanh(z)
        return 1.0 - t * t
    return _logistic(z)


def act_d2_smooth(a: Activation, z):
    z = np.asarray(z, dtype=np.float64)
    if a.code == RELU:
        return np.zeros_like(z)
    if a.code == RELU2:
        return np.where(z > 0.0, 2.0, 0.0)
    if a.code == TANH:
        t = np.tanh(z)
        return -2.0 * t * (1.0 - t * t)
    s = _logistic(z)
    return s * (1.0 - s)


def kink_location(a: Activation, theta1: float, theta2: float) -> float | None:
    """Where ``theta1 * x + theta2`` crosses the kink, or None if there is no kink in x."""
    if not a.kink_at_zero or theta1 == 0.0:
        return None
    return -theta2 / theta1
