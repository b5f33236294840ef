"""
Segmented sieves: primes, complete factorizations and k-free flags.

All arrays are numpy int64 / bool. Blocks are half-open ranges [lo, hi)
and are independent of each other, so they can be produced by any
number of workers sharing one read-only PrimeTable.
"""
import logging
from math import isqrt
from typing import Dict, List, Optional

import numpy as np

from ..errors import PreconditionError, ResourceError
from ..models.arithmetic import Factorization, FactorSieveBlock, KfreeBlock, PrimeTable
from ..models.config import EngineConfig
from .oracles import integer_root

logger = logging.getLogger(__name__)

_EMPTY = np.zeros(0, dtype=np.int64)


def sieve_primes(limit: int, config: Optional[EngineConfig] = None) -> PrimeTable:
    """Eratosthenes sieve up to and including limit."""
    config = config or EngineConfig()
    if limit < 0:
        raise PreconditionError(f"limit must be >= 0, got {limit}")
    if limit > config.max_prime_limit:
        raise ResourceError(
            f"prime table to {limit} exceeds the budget of {config.max_prime_limit}"
        )
    if limit < 2:
        return PrimeTable(limit=limit, primes=_EMPTY.copy())

    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for i in range(2, isqrt(limit) + 1):
        if is_prime[i]:
            is_prime[i * i::i] = False

    primes = np.nonzero(is_prime)[0].astype(np.int64)
    logger.debug(f"Sieved {primes.size} primes up to {limit}")
    return PrimeTable(limit=limit, primes=primes)


def empty_factor_block(lo: int) -> FactorSieveBlock:
    return FactorSieveBlock(
        lo=lo,
        hi=lo,
        offsets=np.zeros(1, dtype=np.int64),
        primes=_EMPTY.copy(),
        exponents=_EMPTY.copy(),
        largest=_EMPTY.copy(),
    )


def factorize_block(lo: int, hi: int, base: PrimeTable,
                    block_size: Optional[int] = None) -> FactorSieveBlock:
    """
    Factor every n in [lo, hi) by striking prime powers.

    Each base prime p <= sqrt(hi - 1) is divided out of its multiples as often
    as it divides them; whatever cofactor remains above 1 is a single prime
    larger than sqrt(hi - 1) and is recorded last with exponent 1.
    """
    if lo < 1:
        raise PreconditionError(f"blocks start at n >= 1, got lo={lo}")
    if lo >= hi:
        return empty_factor_block(lo)
    size = hi - lo
    block_size = block_size or EngineConfig().block_size
    if size > block_size:
        raise PreconditionError(f"block of {size} integers exceeds block size {block_size}")
    root = isqrt(hi - 1)
    if base.limit < root:
        raise PreconditionError(
            f"prime table to {base.limit} cannot factor up to {hi - 1} (needs {root})"
        )

    remaining = np.arange(lo, hi, dtype=np.int64)
    largest = np.ones(size, dtype=np.int64)
    owners: List[np.ndarray] = []
    primes: List[np.ndarray] = []
    exponents: List[np.ndarray] = []

    for p in base.upto(root).tolist():
        first = -lo % p
        if first >= size:
            continue
        idx = np.arange(first, size, p)
        exps = np.ones(idx.size, dtype=np.int64)
        pk = p * p
        while pk <= hi - 1:
            first_k = -lo % pk
            if first_k >= size:
                break
            exps[(first_k - first) // p::pk // p] += 1
            pk *= p
        remaining[idx] //= np.power(p, exps)
        largest[idx] = p
        owners.append(idx)
        primes.append(np.full(idx.size, p, dtype=np.int64))
        exponents.append(exps)

    big = np.nonzero(remaining > 1)[0]
    if big.size:
        largest[big] = remaining[big]
        owners.append(big)
        primes.append(remaining[big])
        exponents.append(np.ones(big.size, dtype=np.int64))

    if owners:
        owner = np.concatenate(owners)
        order = np.argsort(owner, kind="stable")
        all_primes = np.concatenate(primes)[order]
        all_exps = np.concatenate(exponents)[order]
        counts = np.bincount(owner, minlength=size)
    else:
        all_primes, all_exps = _EMPTY.copy(), _EMPTY.copy()
        counts = np.zeros(size, dtype=np.int64)

    offsets = np.zeros(size + 1, dtype=np.int64)
    np.cumsum(counts, out=offsets[1:])
    return FactorSieveBlock(
        lo=lo,
        hi=hi,
        offsets=offsets,
        primes=all_primes,
        exponents=all_exps,
        largest=largest,
    )


def largest_prime_factor(f: Factorization) -> int:
    """P(n), with P(1) = 1."""
    return f.factors[-1][0] if f.factors else 1


def kfree_flags(lo: int, hi: int, k: int, base: PrimeTable) -> KfreeBlock:
    """Mark n in [lo, hi) k-free unless some p^k divides it."""
    if k < 2:
        raise PreconditionError(f"k must be >= 2, got {k}")
    if lo < 1:
        raise PreconditionError(f"blocks start at n >= 1, got lo={lo}")
    if lo >= hi:
        return KfreeBlock(lo=lo, hi=lo, k=k, flags=np.zeros(0, dtype=bool))
    root = integer_root(hi - 1, k)
    if base.limit < root:
        raise PreconditionError(
            f"prime table to {base.limit} cannot strike {k}-th powers up to {hi - 1}"
        )

    flags = np.ones(hi - lo, dtype=bool)
    for p in base.upto(root).tolist():
        pk = p ** k
        flags[-lo % pk::pk] = False
    return KfreeBlock(lo=lo, hi=hi, k=k, flags=flags)


def max_exponents(block: FactorSieveBlock) -> np.ndarray:
    """Largest exponent in each factorization, 0 for n = 1."""
    out = np.zeros(block.size, dtype=np.int64)
    if block.exponents.size:
        owner = np.repeat(np.arange(block.size), block.factor_counts())
        np.maximum.at(out, owner, block.exponents)
    return out


def kfree_from_factors(block: FactorSieveBlock, k: int) -> KfreeBlock:
    """k-free flags read off the factor exponents; cross-checks kfree_flags."""
    return KfreeBlock(lo=block.lo, hi=max(block.hi, block.lo), k=k,
                      flags=max_exponents(block) < k)


def kfree_blocks(block: FactorSieveBlock, ks: List[int], base: PrimeTable) -> Dict[int, KfreeBlock]:
    return {k: kfree_flags(block.lo, max(block.hi, block.lo), k, base) for k in ks}
