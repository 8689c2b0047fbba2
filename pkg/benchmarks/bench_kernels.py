"""Timing comparison for the measurement-search kernel.

The inner loop of the discord optimizer evaluates the conditional
entropy of the unmeasured qubit on a theta x phi grid.  This script
times the pure-numpy implementation against the numba one on the same
inputs and reports per-call cost and the speedup, then times the full
optimizer end to end with whichever backend is active.

Run:  python3 benchmarks/bench_kernels.py [--repeats 50] [--grid 64 128]
Set NANOSPIN_QCORR_DISABLE_NUMBA=1 to force the fallback everywhere.
"""

import argparse
import math
import time

import numpy as np

from nanospin_qcorr import NanoporeParams, bloch_data, discord_numeric, reduced_density
from nanospin_qcorr._kernels import (
    HAVE_NUMBA,
    conditional_entropy_grid_numpy,
    kernel_backend,
)


def sample_states():
    grid = [
        (6, 3.0, 1.1),
        (6, 10.0, 0.4),
        (25, 1.0, 2.8),
        (9, 6.0, 5.0),
        (math.inf, 2.0, 0.0),
    ]
    out = []
    for n, beta, tau in grid:
        rho = reduced_density(NanoporeParams(n=n, beta=beta, tau=tau)).to_matrix()
        out.append(bloch_data(rho))
    return out


def time_grid(fn, states, thetas, phis, repeats):
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        for x, y, t in states:
            fn(x, y, t, thetas, phis)
        best = min(best, time.perf_counter() - start)
    return best / len(states)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=50)
    parser.add_argument("--grid", type=int, nargs=2, default=(64, 128))
    args = parser.parse_args()

    n_theta, n_phi = args.grid
    thetas = np.linspace(0.0, math.pi, n_theta)
    phis = np.linspace(0.0, 2.0 * math.pi, n_phi, endpoint=False)
    states = sample_states()

    print(f"selected backend: {kernel_backend()}")
    print(f"grid {n_theta} x {n_phi}, {len(states)} states, best of {args.repeats}")

    t_numpy = time_grid(
        conditional_entropy_grid_numpy, states, thetas, phis, args.repeats
    )
    print(f"numpy grid kernel: {1e3 * t_numpy:.3f} ms/call")

    if HAVE_NUMBA:
        from nanospin_qcorr._kernels import conditional_entropy_grid_numba

        # first call pays the jit cost; time it separately
        start = time.perf_counter()
        x, y, t = states[0]
        conditional_entropy_grid_numba(x, y, t, thetas, phis)
        print(f"numba compile + first call: {time.perf_counter() - start:.2f} s")
        t_numba = time_grid(
            conditional_entropy_grid_numba, states, thetas, phis, args.repeats
        )
        print(f"numba grid kernel: {1e3 * t_numba:.3f} ms/call")
        print(f"speedup: {t_numpy / t_numba:.1f}x")

        a = conditional_entropy_grid_numpy(x, y, t, thetas, phis)
        b = conditional_entropy_grid_numba(x, y, t, thetas, phis)
        print(f"max backend disagreement: {np.max(np.abs(a - b)):.2e}")
    else:
        print("numba unavailable; skipping compiled comparison")

    rho = reduced_density(NanoporeParams(n=6, beta=3.0, tau=1.1)).to_matrix()
    discord_numeric(rho)  # warm
    start = time.perf_counter()
    reps = 20
    for _ in range(reps):
        discord_numeric(rho)
    per = (time.perf_counter() - start) / reps
    print(f"discord_numeric end to end: {1e3 * per:.1f} ms/state")


if __name__ == "__main__":
    main()
