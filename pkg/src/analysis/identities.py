"""
Numeric checks of the weighted-sum lemma and the k-free Dirichlet series.
"""
import math
from math import isqrt
from typing import Optional

import numpy as np

from ..arithmetic.sieve import kfree_flags, sieve_primes
from ..arithmetic.zeta import coefficients
from ..errors import PreconditionError
from ..models.arithmetic import KfreeBlock, PrimeTable
from ..models.reports import Eq12Result, Lemma2Result

TAIL_SLACK = 1e-12


def _flags_upto(m: int, k: int, weight: Optional[KfreeBlock],
                base: Optional[PrimeTable]) -> np.ndarray:
    """delta_k(n) for 1 <= n <= m as a float array."""
    if weight is None:
        base = base or sieve_primes(isqrt(m))
        weight = kfree_flags(1, m + 1, k, base)
    if weight.k != k or weight.lo != 1 or weight.hi < m + 1:
        raise PreconditionError(
            f"k-free flags must be {k}-free flags covering [1, {m + 1})"
        )
    return weight.flags[:m].astype(np.float64)


def lemma2_check(x: float, k: int, weight: Optional[KfreeBlock] = None,
                 dirichlet_weight: Optional[float] = None,
                 base: Optional[PrimeTable] = None) -> Lemma2Result:
    """
    lhs = sum_{n <= sqrt x} delta_k(n) / (n^2 ln(x/n)), summed from the
    largest n down; rhs = zeta(2) / (zeta(2k) ln x).
    """
    if x < 10:
        raise PreconditionError(f"x must be >= 10, got {x}")
    m = isqrt(math.floor(x))
    delta = _flags_upto(m, k, weight, base)
    n = np.arange(1, m + 1, dtype=np.float64)
    terms = delta / (n * n * np.log(x / n))
    lhs = math.fsum(terms[::-1].tolist())

    if dirichlet_weight is None:
        dirichlet_weight = coefficients([k]).dirichlet_weight[k]
    log_x = math.log(x)
    rhs = dirichlet_weight / log_x
    return Lemma2Result(x=x, k=k, lhs=lhs, rhs=rhs,
                        scaled_diff=abs(lhs - rhs) * log_x * log_x)


def eq12_check(k: int, N: int, weight: Optional[KfreeBlock] = None,
               dirichlet_weight: Optional[float] = None,
               base: Optional[PrimeTable] = None) -> Eq12Result:
    """Partial Dirichlet sum of delta_k(n)/n^2 against zeta(2)/zeta(2k)."""
    if N < 1:
        raise PreconditionError(f"N must be >= 1, got {N}")
    delta = _flags_upto(N, k, weight, base)
    n = np.arange(1, N + 1, dtype=np.float64)
    terms = delta / (n * n)
    partial = math.fsum(terms[::-1].tolist())
    if dirichlet_weight is None:
        dirichlet_weight = coefficients([k]).dirichlet_weight[k]
    return Eq12Result(
        k=k,
        N=N,
        partial=partial,
        target=dirichlet_weight,
        diff=abs(partial - dirichlet_weight),
        tail_bound=1.0 / N + TAIL_SLACK,
    )
