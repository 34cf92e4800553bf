"""Benchmark the jitted kernels against their pure-numpy fallbacks.

Run:  python benchmarks/bench_kernels.py [--points N] [--repeats K]

Timings exclude JIT compilation (a warmup call precedes the clock). The
max|diff| column confirms both paths compute the same numbers.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from univalence import _kernels


def bench(label, fast, slow, args, repeats):
    fast(*args)  # compile / touch caches
    slow(*args)

    def clock(fn):
        best = np.inf
        for _ in range(repeats):
            t0 = time.perf_counter()
            out = fn(*args)
            best = min(best, time.perf_counter() - t0)
        return best, out

    t_fast, out_fast = clock(fast)
    t_slow, out_slow = clock(slow)
    diff = np.max(np.abs(np.asarray(out_fast) - np.asarray(out_slow)))
    print(
        f"{label:24s} njit {t_fast * 1e3:8.2f} ms   numpy {t_slow * 1e3:8.2f} ms   "
        f"speedup {t_slow / t_fast:5.1f}x   max|diff| {diff:.2e}"
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=200_000)
    parser.add_argument("--repeats", type=int, default=5)
    ns = parser.parse_args()

    if not _kernels.HAVE_NUMBA:
        print("numba unavailable: nothing to compare")
        return

    rng = np.random.default_rng(0)
    radii = np.exp(rng.uniform(np.log(1.01), np.log(50.0), ns.points))
    pts = radii * np.exp(1j * rng.uniform(0, 2 * np.pi, ns.points))

    ftail = np.array([0.4 + 0.1j, 0.05 + 0j])
    gtail = np.array([0.1 - 0.2j])
    htail = np.array([0j, 0.25 + 0.1j])

    bench(
        "laurent derivatives",
        _kernels.laurent_derivs_njit,
        _kernels.laurent_derivs_numpy,
        (pts, 1.0 + 0j, 0j, ftail),
        ns.repeats,
    )
    bench(
        "criterion lhs (master)",
        _kernels.criterion_lhs_njit,
        _kernels.criterion_lhs_numpy,
        (
            pts,
            1.0 + 0j,
            0j,
            ftail,
            1.0 + 0j,
            0j,
            gtail,
            0j,
            1.0 + 0j,
            htail,
            0.3 + 0.1j,
            True,
            _kernels.CRIT_THEOREM1,
        ),
        ns.repeats,
    )

    theta = np.linspace(0.0, 2.0 * np.pi, ns.points + 1)
    wobble = 1.0 + 0.2 * np.cos(7 * theta)
    bench(
        "winding sum",
        _kernels.winding_sum_njit,
        _kernels.winding_sum_numpy,
        (wobble * np.cos(theta), wobble * np.sin(theta), 0.1, -0.2),
        ns.repeats,
    )


if __name__ == "__main__":
    main()
