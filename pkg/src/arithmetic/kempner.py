"""
The Kempner function f(n): the smallest m with n | m!.

f(n) is the maximum of f(p^a) over the maximal prime powers p^a of n,
and when P(n)^2 > n it is simply P(n).
"""
import logging
from typing import Optional

import numpy as np

from ..errors import PreconditionError
from ..models.arithmetic import Factorization, FactorSieveBlock, PrimePower
from ..models.config import EngineConfig
from .oracles import trial_division

logger = logging.getLogger(__name__)

# (p, a) pairs are packed as p * _KEY + a; exponents stay below 64 for n < 2^64.
_KEY = 64


def legendre_valuation(p: int, m: int) -> int:
    """Exponent of p in m!."""
    if p < 2:
        raise PreconditionError(f"p must be a prime >= 2, got {p}")
    if m < 0:
        raise PreconditionError(f"m must be >= 0, got {m}")
    total = 0
    while m:
        m //= p
        total += m
    return total


def kempner_prime_power(pp: PrimePower) -> int:
    """Smallest m with p^a | m!, found among the multiples of p."""
    p, a = pp.p, pp.a
    if a == 1:
        return p
    m = p
    while legendre_valuation(p, m) < a:
        m += p
    return m


def kempner(f: Factorization) -> int:
    if not f.factors:
        return 1
    return max(kempner_prime_power(pp) for pp in f.prime_powers)


def lemma1_fast_path(n: int, P: int) -> Optional[int]:
    """P when P^2 > n (then f(n) = P), otherwise None."""
    return P if P * P > n else None


def kempner_bruteforce(n: int, config: Optional[EngineConfig] = None) -> int:
    """
    Linear scan for the smallest m with n | m!.

    Divisibility is tested prime by prime through Legendre valuations. The
    scan starts at P(n), below which P(n) cannot divide m!.
    """
    bound = (config or EngineConfig()).oracle_bound
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if n > bound:
        raise PreconditionError(f"n={n} exceeds the oracle bound {bound}")
    factors = trial_division(n)
    if not factors:
        return 1
    m = max(factors)
    while any(legendre_valuation(p, m) < a for p, a in factors.items()):
        m += 1
    return m


def fast_path_mask(numbers: np.ndarray, largest: np.ndarray) -> np.ndarray:
    """
    Vectorised lemma1 condition P(n)^2 > n, evaluated as P > isqrt(n).

    The comparison avoids squaring P, which would overflow int64 once
    P exceeds about 3e9.
    """
    root = np.sqrt(numbers.astype(np.float64)).astype(np.int64)
    root -= root * root > numbers
    root += (root + 1) * (root + 1) <= numbers
    return largest > root


def block_kempner(block: FactorSieveBlock, mask: Optional[np.ndarray] = None) -> np.ndarray:
    """
    f(n) for every selected offset of a factor block; unselected offsets hold 0.

    Each distinct (p, a) with a >= 2 in the selection is resolved once
    through kempner_prime_power; a = 1 contributes p itself.
    """
    size = block.size
    out = np.zeros(size, dtype=np.int64)
    if size == 0:
        return out
    selected = np.ones(size, dtype=bool) if mask is None else mask.astype(bool)
    counts = block.factor_counts()
    owner = np.repeat(np.arange(size), counts)
    take = selected[owner]
    p = block.primes[take]
    a = block.exponents[take]
    values = p.copy()
    repeated = a > 1
    if repeated.any():
        keys = p[repeated] * _KEY + a[repeated]
        unique, inverse = np.unique(keys, return_inverse=True)
        resolved = np.array(
            [
                kempner_prime_power(PrimePower.model_construct(p=int(key // _KEY), a=int(key % _KEY)))
                for key in unique.tolist()
            ],
            dtype=np.int64,
        )
        values[repeated] = resolved[inverse.reshape(-1)]
        logger.debug(f"Resolved {unique.size} prime powers in block [{block.lo}, {block.hi})")
    np.maximum.at(out, owner[take], values)
    out[selected & (counts == 0)] = 1
    return out
