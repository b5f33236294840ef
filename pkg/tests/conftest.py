"""
Shared fixtures: a small prime table and a small exact summation run.
"""
import pytest

from src.arithmetic.sieve import sieve_primes
from src.models.config import SumConfig
from src.service import run_sums


@pytest.fixture(scope="session")
def base_primes():
    """Primes up to 100, enough to factor everything below 10^4."""
    return sieve_primes(100)


@pytest.fixture(scope="session")
def small_config():
    return SumConfig(x_max=1000, grid=[10, 100, 1000], ks=[2, 3], moment_orders=[2, 3],
                     block_size=64)


@pytest.fixture(scope="session")
def small_report(small_config):
    """Exact sums to 10^3 with checkpoints at 10, 100 and 1000."""
    return run_sums(small_config)
