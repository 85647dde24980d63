"""Hot loops: quadrature energy, batched energies and the finite-difference gradient.

Two interchangeable backends exist. The numba one is used when numba imports
and ``RITZRELU_DISABLE_NUMBA`` is unset (or "0"); otherwise the vectorised
numpy versions run. Both compute the same sums in the same order up to
rounding.
"""

from __future__ import annotations

import math
import os

import numpy as np

# activation codes match ritzrelu.activation: 0 relu, 1 relu2, 2 tanh, 3 softplus
_CHUNK = 64


def _want_numba() -> bool:
    flag = os.environ.get("RITZRELU_DISABLE_NUMBA", "0").strip().lower()
    if flag not in ("", "0", "false", "no"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


# ----------------------------------------------------------------- numpy path


def _np_act(z, code):
    if code == 0:
        return np.maximum(z, 0.0)
    if code == 1:
        r = np.maximum(z, 0.0)
        return r * r
    if code == 2:
        return np.tanh(z)
    return np.logaddexp(0.0, z)


def _np_act1(z, code):
    if code == 0:
        return (z > 0.0).astype(np.float64)
    if code == 1:
        return 2.0 * np.maximum(z, 0.0)
    if code == 2:
        t = np.tanh(z)
        return 1.0 - t * t
    return 0.5 * (1.0 + np.tanh(0.5 * z))


def _np_columns(t1, t2, t3, x, code):
    """Per-neuron contributions to u and du/dx, shape (..., M, N)."""
    s = np.sin(np.pi * np.minimum(x, 1.0 - x))[:, None]
    c = (np.pi * np.cos(np.pi * x))[:, None]
    t1 = t1[..., None, :]
    z = t1 * x[:, None] + t2[..., None, :]
    r0 = _np_act(z, code)
    u = t3[..., None, :] * s * r0
    ux = t3[..., None, :] * (c * r0 + s * _np_act1(z, code) * t1)
    return u, ux


def _np_energy_batch(thetas, x, w, kappa, b, code):
    thetas = np.atleast_2d(thetas)
    n = thetas.shape[1] // 3
    out = np.empty(thetas.shape[0])
    for start in range(0, thetas.shape[0], _CHUNK):
        blk = thetas[start:start + _CHUNK]
        u, ux = _np_columns(blk[:, :n], blk[:, n:2 * n], blk[:, 2 * n:], x, code)
        u = u.sum(axis=-1)
        ux = ux.sum(axis=-1)
        out[start:start + _CHUNK] = w * np.sum(0.5 * kappa * ux * ux - b * u, axis=-1)
    return out


def _np_energy(theta, x, w, kappa, b, code):
    return float(_np_energy_batch(theta[None, :], x, w, kappa, b, code)[0])


def _np_fd_grad(theta, x, w, kappa, b, code, h):
    # perturbing one coordinate only changes that neuron's column
    n = theta.shape[0] // 3
    t1, t2, t3 = theta[:n], theta[n:2 * n], theta[2 * n:]
    ucol, uxcol = _np_columns(t1, t2, t3, x, code)
    utot, uxtot = ucol.sum(axis=1), uxcol.sum(axis=1)
    grad = np.empty(3 * n)
    for blockno in range(3):
        # rows: +h then -h for every neuron, each a (M, N) column set
        pert = []
        for sgn in (1.0, -1.0):
            tt = [t1, t2, t3]
            tt[blockno] = tt[blockno] + sgn * h
            pert.append(_np_columns(tt[0], tt[1], tt[2], x, code))
        e = []
        for up, uxp in pert:
            u = utot[:, None] - ucol + up
            ux = uxtot[:, None] - uxcol + uxp
            e.append(w * np.sum(0.5 * kappa[:, None] * ux * ux - b[:, None] * u, axis=0))
        grad[blockno * n:(blockno + 1) * n] = (e[0] - e[1]) / (2.0 * h)
    return grad


# ----------------------------------------------------------------- numba path


def _build_numba():
    from numba import njit

    @njit(cache=True, inline="always")
    def act(z, code):
        if code == 0:
            return z if z > 0.0 else 0.0
        if code == 1:
            return z * z if z > 0.0 else 0.0
        if code == 2:
            return math.tanh(z)
        if z > 0.0:
            return z + math.log1p(math.exp(-z))
        return math.log1p(math.exp(z))

    @njit(cache=True, inline="always")
    def act1(z, code):
        if code == 0:
            return 1.0 if z > 0.0 else 0.0
        if code == 1:
            return 2.0 * z if z > 0.0 else 0.0
        if code == 2:
            t = math.tanh(z)
            return 1.0 - t * t
        return 0.5 * (1.0 + math.tanh(0.5 * z))

    @njit(cache=True)
    def columns(theta, x, code, ucol, uxcol):
        n = theta.shape[0] // 3
        for i in range(x.shape[0]):
            s = math.sin(math.pi * min(x[i], 1.0 - x[i]))
            c = math.pi * math.cos(math.pi * x[i])
            for j in range(n):
                z = theta[j] * x[i] + theta[n + j]
                r0 = act(z, code)
                ucol[i, j] = theta[2 * n + j] * s * r0
                uxcol[i, j] = theta[2 * n + j] * (c * r0 + s * act1(z, code) * theta[j])

    @njit(cache=True)
    def energy(theta, x, w, kappa, b, code):
        n = theta.shape[0] // 3
        total = 0.0
        for i in range(x.shape[0]):
            s = math.sin(math.pi * min(x[i], 1.0 - x[i]))
            c = math.pi * math.cos(math.pi * x[i])
            u = 0.0
            ux = 0.0
            for j in range(n):
                z = theta[j] * x[i] + theta[n + j]
                r0 = act(z, code)
                u += theta[2 * n + j] * s * r0
                ux += theta[2 * n + j] * (c * r0 + s * act1(z, code) * theta[j])
            total += 0.5 * kappa[i] * ux * ux - b[i] * u
        return w * total

    @njit(cache=True)
    def energy_batch(thetas, x, w, kappa, b, code):
        out = np.empty(thetas.shape[0])
        for k in range(thetas.shape[0]):
            out[k] = energy(thetas[k], x, w, kappa, b, code)
        return out

    @njit(cache=True)
    def fd_grad(theta, x, w, kappa, b, code, h):
        n = theta.shape[0] // 3
        m = x.shape[0]
        ucol = np.empty((m, n))
        uxcol = np.empty((m, n))
        columns(theta, x, code, ucol, uxcol)
        sv = np.empty(m)
        cv = np.empty(m)
        for i in range(m):
            sv[i] = math.sin(math.pi * min(x[i], 1.0 - x[i]))
            cv[i] = math.pi * math.cos(math.pi * x[i])
        utot = np.zeros(m)
        uxtot = np.zeros(m)
        for i in range(m):
            for j in range(n):
                utot[i] += ucol[i, j]
                uxtot[i] += uxcol[i, j]
        grad = np.empty(3 * n)
        for k in range(3 * n):
            j = k % n
            e = np.zeros(2)
            for side in range(2):
                t1 = theta[j]
                t2 = theta[n + j]
                t3 = theta[2 * n + j]
                d = h if side == 0 else -h
                if k < n:
                    t1 += d
                elif k < 2 * n:
                    t2 += d
                else:
                    t3 += d
                acc = 0.0
                for i in range(m):
                    z = t1 * x[i] + t2
                    r0 = act(z, code)
                    u = utot[i] - ucol[i, j] + t3 * sv[i] * r0
                    ux = uxtot[i] - uxcol[i, j] + t3 * (cv[i] * r0 + sv[i] * act1(z, code) * t1)
                    acc += 0.5 * kappa[i] * ux * ux - b[i] * u
                e[side] = w * acc
            grad[k] = (e[0] - e[1]) / (2.0 * h)
        return grad

    return energy, energy_batch, fd_grad


if _want_numba():
    BACKEND = "numba"
    energy_kernel, energy_batch_kernel, fd_grad_kernel = _build_numba()
else:
    BACKEND = "numpy"
    energy_kernel = _np_energy
    energy_batch_kernel = _np_energy_batch
    fd_grad_kernel = _np_fd_grad

numpy_kernels = (_np_energy, _np_energy_batch, _np_fd_grad)
