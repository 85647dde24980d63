"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--width 50] [--grid-points 250] [--repeat 20]

Both backends are loaded in one process; the numba column is skipped when
numba is unavailable.
"""

import argparse
import time

import numpy as np

from ritzrelu import _kernels
from ritzrelu.energy import sine_problem
from ritzrelu.landscape import eps_axis
from ritzrelu.quadrature import make_grid


def best_of(fn, repeat):
    fn()  # warm-up / JIT
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--width", type=int, default=50)
    ap.add_argument("--grid-points", type=int, default=250)
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()

    grid = make_grid(args.grid_points)
    kappa, b = sine_problem(3).sample(grid)
    x, w = grid.points, grid.weight
    rng = np.random.default_rng(0)
    theta = rng.uniform(-0.5, 0.5, 3 * args.width)
    e = eps_axis(51)
    v1, v2 = rng.normal(size=(2, theta.size))
    slab = theta + e.repeat(51)[:, None] * v1 + np.tile(e, 51)[:, None] * v2

    backends = {"numpy": _kernels.numpy_kernels}
    try:
        backends["numba"] = _kernels._build_numba()
    except ImportError:
        pass

    cases = {
        "energy": lambda k: (lambda: k[0](theta, x, w, kappa, b, 0)),
        "fd_grad (3N probes)": lambda k: (lambda: k[2](theta, x, w, kappa, b, 0, 1e-3)),
        "energy_batch (51x51 slice)": lambda k: (lambda: k[1](slab, x, w, kappa, b, 0)),
    }
    print(f"width {args.width}, grid {args.grid_points}, best of {args.repeat}")
    print(f"{'kernel':<28}" + "".join(f"{n:>14}" for n in backends) + f"{'speedup':>10}")
    for label, make in cases.items():
        t = {n: best_of(make(k), args.repeat) for n, k in backends.items()}
        speed = t["numpy"] / t["numba"] if "numba" in t else float("nan")
        print(f"{label:<28}" + "".join(f"{v * 1e3:>12.3f}ms" for v in t.values()) + f"{speed:>9.1f}x")


if __name__ == "__main__":
    main()
