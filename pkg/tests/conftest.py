import numpy as np
import pytest

from univalence import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # Compile the jitted kernels once so timed tests measure math, not JIT.
    _kernels.warmup()


@pytest.fixture()
def rng():
    return np.random.default_rng(20240809)


def exterior_points(rng, count, r_lo=1.1, r_hi=10.0):
    radii = np.exp(rng.uniform(np.log(r_lo), np.log(r_hi), count))
    angles = rng.uniform(0.0, 2.0 * np.pi, count)
    return radii * np.exp(1j * angles)
