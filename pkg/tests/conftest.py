import numpy as np
import pytest

from spiralmap import GridSpec, select_A


@pytest.fixture(scope="session")
def small_grid():
    return GridSpec.make(angular_count=512, m_max=12, interior_count=1024, seed=42)


@pytest.fixture(scope="session")
def default_instance(small_grid):
    # Default parameter triple used throughout: k=0.5, eps=0.1, alpha=0.3.
    return select_A(0.5, 0.1, 0.3, small_grid)


@pytest.fixture(scope="session")
def default_params(default_instance):
    return default_instance.params


def central_diff(fn, z: complex, step: float = 1e-6) -> complex:
    """Central finite difference of an analytic function along the real axis."""
    return (fn(z + step) - fn(z - step)) / (2.0 * step)


def disk_points(rng: np.random.Generator, n: int, rmax: float = 1.0) -> np.ndarray:
    rad = rmax * np.sqrt(rng.random(n))
    ang = 2.0 * np.pi * rng.random(n)
    return rad * np.exp(1j * ang)


def strip_points(rng: np.random.Generator, n: int, x_lo: float = 10.0,
                 x_hi: float = 1e4, b: float = np.pi / 2) -> np.ndarray:
    x = np.exp(rng.uniform(np.log(x_lo), np.log(x_hi), n))
    y = rng.uniform(-b, b, n)
    return x + 1j * y
