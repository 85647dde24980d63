"""Hyper-dual numbers: forward-mode derivatives the way an autodiff tool takes them.

A value ``a + b e1 + c e2 + d e1 e2`` with ``e1^2 = e2^2 = 0`` carries two
first derivatives and the mixed second derivative. Elementwise functions
follow the chain rule with the *classical* derivative at the evaluation
point, so ReLU's step derivative differentiates to 0 and no delta ever
appears. That is exactly the convention reverse-mode frameworks follow.
"""

from __future__ import annotations

import numpy as np

from .activation import Activation, act_d1, act_d2_smooth, act_value
from .network import Params


class HyperDual:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b=0.0, c=0.0, d=0.0):
        self.a, self.b, self.c, self.d = (np.asarray(v, dtype=np.float64) for v in (a, b, c, d))

    def __add__(self, o):
        if not isinstance(o, HyperDual):
            return HyperDual(self.a + o, self.b, self.c, self.d)
        return HyperDual(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __mul__(self, o):
        if not isinstance(o, HyperDual):
            return HyperDual(self.a * o, self.b * o, self.c * o, self.d * o)
        return HyperDual(
            self.a * o.a,
            self.a * o.b + self.b * o.a,
            self.a * o.c + self.c * o.a,
            self.a * o.d + self.b * o.c + self.c * o.b + self.d * o.a,
        )

    __rmul__ = __mul__

    def apply(self, f, f1, f2):
        """``f(self)`` given f and its first two derivatives at ``self.a``."""
        d1 = f1(self.a)
        return HyperDual(f(self.a), d1 * self.b, d1 * self.c, d1 * self.d + f2(self.a) * self.b * self.c)


def hd_sin_pi(x: HyperDual) -> HyperDual:
    return x.apply(
        lambda t: np.sin(np.pi * np.minimum(t, 1.0 - t)),
        lambda t: np.pi * np.cos(np.pi * t),
        lambda t: -np.pi ** 2 * np.sin(np.pi * t),
    )


def hd_act(act: Activation, z: HyperDual) -> HyperDual:
    return z.apply(lambda t: act_value(act, t), lambda t: act_d1(act, t), lambda t: act_d2_smooth(act, t))


def hd_forward(act: Activation, theta1, theta2, theta3, x):
    s = hd_sin_pi(x)
    total = 0.0
    for t1, t2, t3 in zip(theta1, theta2, theta3):
        total = total + t3 * hd_act(act, t1 * x + t2)
    return s * total


def autodiff_derivatives(act: Activation, p: Params, x) -> dict[str, np.ndarray]:
    """du/dx, du/dtheta and d2u/dx dtheta on ``x`` by hyper-dual evaluation.

    Returns ``u`` (M,), ``du_dx`` (M,), ``du_dtheta`` (M, 3N), ``d2u_dx_dtheta`` (M, 3N).
    """
    x = np.asarray(x, dtype=np.float64)
    n = p.width
    flat = p.flat()
    du = np.empty((x.shape[0], 3 * n))
    mixed = np.empty((x.shape[0], 3 * n))
    one = np.ones_like(x)
    zero = np.zeros_like(x)
    u = ux = None
    for k in range(3 * n):
        th = [HyperDual(v) for v in flat]
        th[k] = HyperDual(flat[k], 0.0, 1.0, 0.0)
        res = hd_forward(act, th[:n], th[n:2 * n], th[2 * n:], HyperDual(x, one, zero, zero))
        du[:, k] = res.c
        mixed[:, k] = res.d
        if u is None:
            u, ux = res.a, res.b
    return {"u": u, "du_dx": ux, "du_dtheta": du, "d2u_dx_dtheta": mixed}
