"""
Tests for the Kempner function and its fast path.
"""
import numpy as np
import pytest
from pydantic import ValidationError

from src.arithmetic.kempner import (
    block_kempner,
    fast_path_mask,
    kempner,
    kempner_bruteforce,
    kempner_prime_power,
    legendre_valuation,
    lemma1_fast_path,
)
from src.arithmetic.oracles import trial_division
from src.arithmetic.sieve import factorize_block, sieve_primes
from src.errors import PreconditionError
from src.models.arithmetic import Factorization, PrimePower
from src.models.config import EngineConfig


class TestLegendreValuation:
    """Test cases for legendre_valuation."""

    def test_known_values(self):
        """Test exponents of p in m!."""
        assert legendre_valuation(2, 10) == 8
        assert legendre_valuation(5, 100) == 24
        assert legendre_valuation(3, 0) == 0
        assert legendre_valuation(7, 6) == 0

    def test_preconditions(self):
        """Test invalid p and m."""
        with pytest.raises(PreconditionError):
            legendre_valuation(1, 10)
        with pytest.raises(PreconditionError):
            legendre_valuation(2, -1)


class TestKempner:
    """Test cases for kempner and kempner_prime_power."""

    @pytest.mark.parametrize("p,a,expected", [
        (2, 1, 2), (2, 2, 4), (2, 3, 4), (2, 4, 6), (2, 10, 12),
        (3, 3, 9), (3, 4, 9), (5, 2, 10), (5, 6, 25), (7, 1, 7),
    ])
    def test_prime_powers(self, p, a, expected):
        """Test f(p^a) for hand-checked prime powers."""
        assert kempner_prime_power(PrimePower(p=p, a=a)) == expected

    def test_first_values(self, base_primes):
        """Test f(1..10) = 1, 2, 3, 4, 5, 3, 7, 4, 6, 5."""
        block = factorize_block(1, 11, base_primes)
        values = [kempner(block.entry(i)) for i in range(10)]
        assert values == [1, 2, 3, 4, 5, 3, 7, 4, 6, 5]
        assert sum(values) == 40

    def test_validated_factorization(self):
        """Test kempner on explicit factorizations."""
        assert kempner(Factorization(n=1, factors=[])) == 1
        assert kempner(Factorization(n=1024, factors=[(2, 10)])) == 12
        assert kempner(Factorization(n=24, factors=[(2, 3), (3, 1)])) == 4

    def test_invalid_models(self):
        """Test that malformed prime powers and factorizations are rejected."""
        with pytest.raises(ValidationError):
            PrimePower(p=4, a=1)
        with pytest.raises(ValidationError):
            Factorization(n=12, factors=[(3, 1), (2, 2)])
        with pytest.raises(ValidationError):
            Factorization(n=13, factors=[(2, 2), (3, 1)])

    def test_matches_bruteforce(self, base_primes):
        """Test the factorization path against the brute-force scan."""
        block = factorize_block(1, 3001, base_primes)
        for n in range(1, 3001):
            assert kempner(block.factorization_of(n)) == kempner_bruteforce(n), n

    def test_bruteforce_bound(self):
        """Test that the oracle refuses n beyond its bound."""
        with pytest.raises(PreconditionError):
            kempner_bruteforce(1001, EngineConfig(oracle_bound=1000))
        with pytest.raises(PreconditionError):
            kempner_bruteforce(0)

    @pytest.mark.slow
    def test_matches_bruteforce_to_1e5(self):
        """Test zero mismatches between both evaluators for n <= 10^5."""
        base = sieve_primes(400)
        block = factorize_block(1, 10 ** 5 + 1, base)
        values = block_kempner(block)
        mismatches = [n for n in range(1, 10 ** 5 + 1)
                      if int(values[n - 1]) != kempner_bruteforce(n)]
        assert mismatches == []


class TestFastPath:
    """Test cases for the P(n)^2 > n shortcut."""

    def test_scalar(self):
        """Test lemma1_fast_path on both sides of the boundary."""
        assert lemma1_fast_path(10, 5) == 5
        assert lemma1_fast_path(9, 3) is None
        assert lemma1_fast_path(1, 1) is None
        assert lemma1_fast_path(1024, 2) is None

    def test_mask_matches_scalar(self, base_primes):
        """Test the vectorised mask against the scalar condition."""
        block = factorize_block(1, 5001, base_primes)
        mask = fast_path_mask(block.numbers(), block.largest)
        expected = [lemma1_fast_path(n, int(P)) is not None
                    for n, P in zip(range(1, 5001), block.largest.tolist())]
        assert mask.tolist() == expected

    def test_mask_near_large_squares(self):
        """Test exactness around k^2 where float sqrt rounds."""
        k = 10 ** 9 + 7
        numbers = np.array([k * k - 1, k * k, k * k + 1], dtype=np.int64)
        largest = np.array([k, k, k], dtype=np.int64)
        assert fast_path_mask(numbers, largest).tolist() == [True, False, False]

    @pytest.mark.slow
    def test_fast_path_exhaustive_to_1e6(self):
        """Test f(n) = P(n) whenever P(n)^2 > n, for n <= 10^6."""
        base = sieve_primes(1000)
        for lo in range(1, 10 ** 6 + 1, 2 ** 17):
            hi = min(lo + 2 ** 17, 10 ** 6 + 1)
            block = factorize_block(lo, hi, base)
            fast = fast_path_mask(block.numbers(), block.largest)
            values = block_kempner(block, fast)
            assert np.array_equal(values[fast], block.largest[fast])


class TestBlockKempner:
    """Test cases for block_kempner."""

    def test_full_block(self, base_primes):
        """Test the vectorised values against kempner per entry."""
        block = factorize_block(1, 2001, base_primes)
        values = block_kempner(block)
        assert values.tolist() == [kempner(block.entry(i)) for i in range(block.size)]

    def test_mask_leaves_zeros(self, base_primes):
        """Test that unselected offsets hold 0."""
        block = factorize_block(1, 11, base_primes)
        mask = np.zeros(10, dtype=bool)
        mask[[0, 3, 7]] = True
        assert block_kempner(block, mask).tolist() == [1, 0, 0, 4, 0, 0, 0, 4, 0, 0]

    def test_single_entry(self):
        """Test f(1024) through a one-element block."""
        block = factorize_block(1024, 1025, sieve_primes(32), block_size=1)
        assert block_kempner(block).tolist() == [12]


class TestKempnerProperties:
    """Property checks of f(n) over exhaustive and random ranges."""

    def test_divisibility_contract(self, base_primes):
        """Test n | f(n)! and n does not divide (f(n) - 1)! for 2 <= n <= 10^4."""
        block = factorize_block(1, 10 ** 4 + 1, base_primes)
        for n in range(2, 10 ** 4 + 1):
            factors = block.factorization_of(n).factors
            m = kempner(block.factorization_of(n))
            assert all(legendre_valuation(p, m) >= a for p, a in factors), n
            assert any(legendre_valuation(p, m - 1) < a for p, a in factors), n

    def test_bounds_by_largest_prime(self):
        """Test P(n) <= f(n) <= P(n) log2(n) for n <= 10^5."""
        block = factorize_block(1, 10 ** 5 + 1, sieve_primes(400))
        values = block_kempner(block)
        numbers = block.numbers()
        assert np.all(values >= block.largest)
        upper = block.largest[1:] * np.log2(numbers[1:].astype(np.float64))
        assert np.all(values[1:] <= upper + 1e-9)

    def test_prime_power_bound(self):
        """Test that f(p^a) is a multiple of p and at most a*p for p <= 100, a <= 50."""
        for p in sieve_primes(100).primes.tolist():
            for a in range(1, 51):
                value = kempner_prime_power(PrimePower(p=p, a=a))
                assert value % p == 0, (p, a)
                assert value <= a * p, (p, a)

    @staticmethod
    def _coprime_max_violations(limit: int) -> int:
        block = factorize_block(1, limit * limit + 1, sieve_primes(limit))
        values = block_kempner(block)
        m, n = np.meshgrid(np.arange(1, limit + 1), np.arange(1, limit + 1), indexing="ij")
        coprime = np.gcd(m, n) == 1
        m, n = m[coprime], n[coprime]
        expected = np.maximum(values[m - 1], values[n - 1])
        return int(np.count_nonzero(values[m * n - 1] != expected))

    def test_coprime_max(self):
        """Test f(mn) = max(f(m), f(n)) for coprime m, n <= 100."""
        assert self._coprime_max_violations(100) == 0

    @pytest.mark.slow
    def test_coprime_max_to_1e3(self):
        """Test f(mn) = max(f(m), f(n)) for coprime m, n <= 10^3."""
        assert self._coprime_max_violations(1000) == 0

    @pytest.mark.slow
    def test_random_matches_bruteforce_to_1e7(self):
        """Test 10^4 random n <= 10^7 against the brute-force scan."""
        rng = np.random.default_rng(20240601)
        for n in rng.integers(1, 10 ** 7, endpoint=True, size=10 ** 4).tolist():
            factors = sorted(trial_division(n).items())
            assert kempner(Factorization(n=n, factors=factors)) == kempner_bruteforce(n), n

    @pytest.mark.slow
    def test_random_sieve_blocks_match_bruteforce(self):
        """Test short sieve blocks at random offsets below 10^7."""
        rng = np.random.default_rng(7)
        base = sieve_primes(3163)
        for lo in rng.integers(1, 10 ** 7 - 100, size=20).tolist():
            block = factorize_block(lo, lo + 100, base)
            values = block_kempner(block).tolist()
            assert values == [kempner_bruteforce(n) for n in range(lo, lo + 100)], lo
