"""
Data models for primes, factorizations and sieve blocks.
"""
from math import prod
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..arithmetic.oracles import is_prime_trial


class PrimeTable(BaseModel):
    """All primes up to an inclusive limit, ascending."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    limit: int = Field(..., ge=0, description="Inclusive upper bound of the table")
    primes: np.ndarray = Field(..., description="Ascending int64 array of primes <= limit")

    @model_validator(mode="after")
    def _check_order(self) -> "PrimeTable":
        if self.primes.size:
            if np.any(np.diff(self.primes) <= 0):
                raise ValueError("primes must be strictly increasing")
            if int(self.primes[-1]) > self.limit:
                raise ValueError("table holds a prime above its limit")
        return self

    @property
    def count(self) -> int:
        return int(self.primes.size)

    def pi(self, x: int) -> int:
        """Exact prime count up to x (x must not exceed the limit)."""
        if x > self.limit:
            raise ValueError(f"pi({x}) asked of a table sieved to {self.limit}")
        return int(np.searchsorted(self.primes, x, side="right"))

    def upto(self, y: int) -> np.ndarray:
        return self.primes[: np.searchsorted(self.primes, y, side="right")]

    def __len__(self) -> int:
        return self.count


class PrimePower(BaseModel):
    """A maximal prime power p^a dividing some n."""
    model_config = ConfigDict(frozen=True)

    p: int = Field(..., ge=2, description="Prime base")
    a: int = Field(..., ge=1, description="Exponent")

    @field_validator("p")
    @classmethod
    def _prime(cls, p: int) -> int:
        if not is_prime_trial(p):
            raise ValueError(f"{p} is not prime")
        return p


class Factorization(BaseModel):
    """n = p_1^a_1 ... p_s^a_s with p_1 < ... < p_s; empty for n = 1."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="The factored integer")
    factors: List[Tuple[int, int]] = Field(
        default_factory=list, description="(prime, exponent) pairs, primes ascending"
    )

    @model_validator(mode="after")
    def _check(self) -> "Factorization":
        last = 1
        for p, a in self.factors:
            if p <= last:
                raise ValueError("primes must be strictly increasing")
            if a < 1:
                raise ValueError(f"exponent of {p} must be >= 1")
            if not is_prime_trial(p):
                raise ValueError(f"{p} is not prime")
            last = p
        if prod(p ** a for p, a in self.factors) != self.n:
            raise ValueError(f"factors do not multiply to {self.n}")
        return self

    @property
    def prime_powers(self) -> List[PrimePower]:
        return [PrimePower.model_construct(p=p, a=a) for p, a in self.factors]

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(str(p) if a == 1 else f"{p}^{a}" for p, a in self.factors)


class FactorSieveBlock(BaseModel):
    """
    Complete factorizations of every integer in [lo, hi).

    Stored column-wise: the factors of lo + i are
    primes[offsets[i]:offsets[i+1]] with matching exponents.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    lo: int = Field(..., ge=1)
    hi: int = Field(...)
    offsets: np.ndarray = Field(..., description="Row pointers, length size + 1")
    primes: np.ndarray = Field(..., description="Prime of each factor entry")
    exponents: np.ndarray = Field(..., description="Exponent of each factor entry")
    largest: np.ndarray = Field(..., description="P(n) per offset, 1 for n = 1")

    @model_validator(mode="after")
    def _check_shapes(self) -> "FactorSieveBlock":
        size = max(self.hi - self.lo, 0)
        if self.offsets.size != size + 1 or self.largest.size != size:
            raise ValueError("row arrays do not match the block range")
        if self.primes.size != self.exponents.size or int(self.offsets[-1]) != self.primes.size:
            raise ValueError("factor arrays are inconsistent with offsets")
        return self

    @property
    def size(self) -> int:
        return max(self.hi - self.lo, 0)

    def __len__(self) -> int:
        return self.size

    def numbers(self) -> np.ndarray:
        return np.arange(self.lo, max(self.hi, self.lo), dtype=np.int64)

    def factor_counts(self) -> np.ndarray:
        return np.diff(self.offsets)

    def entry(self, i: int) -> Factorization:
        start, stop = int(self.offsets[i]), int(self.offsets[i + 1])
        pairs = [
            (int(p), int(a))
            for p, a in zip(self.primes[start:stop], self.exponents[start:stop])
        ]
        return Factorization.model_construct(n=self.lo + i, factors=pairs)

    def factorization_of(self, n: int) -> Factorization:
        if not self.lo <= n < self.hi:
            raise IndexError(f"{n} outside block [{self.lo}, {self.hi})")
        return self.entry(n - self.lo)


class KfreeBlock(BaseModel):
    """k-free flags for every integer in [lo, hi)."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    lo: int = Field(..., ge=1)
    hi: int = Field(...)
    k: int = Field(..., ge=2)
    flags: np.ndarray = Field(..., description="True where n is k-free")

    @model_validator(mode="after")
    def _check_shape(self) -> "KfreeBlock":
        if self.flags.size != max(self.hi - self.lo, 0):
            raise ValueError("flag array does not match the block range")
        return self

    @property
    def size(self) -> int:
        return max(self.hi - self.lo, 0)

    def flag(self, n: int) -> bool:
        return bool(self.flags[n - self.lo])

    def count(self) -> int:
        return int(np.count_nonzero(self.flags))
