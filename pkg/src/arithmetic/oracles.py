"""
Trial-division oracles.

Nothing here touches the sieve path; the functions exist so that the
sieve, the Kempner evaluator and the summation pipeline can be checked
against an independent implementation.
"""
from math import isqrt
from typing import Dict


def is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


def trial_division(n: int) -> Dict[int, int]:
    """Return {p: v_p(n)} for n >= 1, primes in ascending order."""
    if n < 1:
        raise ValueError(f"trial_division needs n >= 1, got {n}")
    factors: Dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    i = 5
    while i * i <= n:
        for p in (i, i + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        i += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def largest_prime_factor_trial(n: int) -> int:
    factors = trial_division(n)
    return max(factors) if factors else 1


def prime_count_trial(limit: int) -> int:
    return sum(1 for m in range(2, limit + 1) if is_prime_trial(m))


def is_kfree_trial(n: int, k: int) -> bool:
    return all(a < k for a in trial_division(n).values())


def integer_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) computed exactly."""
    if n < 0:
        raise ValueError("integer_root needs n >= 0")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return isqrt(n)
    r = int(round(n ** (1.0 / k)))
    while r ** k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r
