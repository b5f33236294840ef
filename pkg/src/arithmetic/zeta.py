"""
Certified evaluation of zeta(s) for real s >= 1.5 and of the main-term
constants built from it.

zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2 + R with
0 <= R <= s N^(-s-1) / 12, so N is chosen to push that bound below eps.
"""
import logging
import math
from typing import Iterable, Optional

import mpmath

from ..errors import DomainError, InvariantViolation, PreconditionError
from ..models.config import MAX_K, EngineConfig
from ..models.reports import Coefficients

logger = logging.getLogger(__name__)

MIN_EPS = 1e-14
WORKING_DPS = 30
MAX_CLOSED_FORM = 20


def euler_maclaurin_cutoff(s: float, eps: float) -> int:
    """Smallest N with s * N^(-s-1) / 12 <= eps / 2."""
    n = max(1, math.ceil((s / (6.0 * eps)) ** (1.0 / (s + 1.0))))
    while s * n ** (-s - 1.0) / 12.0 > eps / 2.0:
        n += 1
    return n


def zeta(s: float, eps: Optional[float] = None) -> float:
    eps = EngineConfig().zeta_eps if eps is None else eps
    if s <= 1:
        raise DomainError(f"zeta(s) diverges for s = {s} <= 1")
    if s < 1.5:
        raise PreconditionError(f"zeta is evaluated for s >= 1.5 only, got {s}")
    if eps < MIN_EPS:
        raise PreconditionError(f"eps must be >= {MIN_EPS}, got {eps}")

    cutoff = euler_maclaurin_cutoff(s, eps)
    with mpmath.workdps(WORKING_DPS):
        ms = mpmath.mpf(s)
        partial = mpmath.fsum(mpmath.mpf(n) ** -ms for n in range(1, cutoff))
        big_n = mpmath.mpf(cutoff)
        tail = big_n ** (1 - ms) / (ms - 1) + big_n ** -ms / 2
        value = float(partial + tail)
    logger.debug(f"zeta({s}) with N={cutoff}: {value!r}")
    return value


def even_zeta_closed_form(two_k: int) -> float:
    """zeta(2k) = (-1)^(k+1) B_2k (2 pi)^2k / (2 (2k)!), for 2 <= 2k <= 20."""
    if two_k % 2 or not 2 <= two_k <= MAX_CLOSED_FORM:
        raise PreconditionError(f"closed forms cover even 2..{MAX_CLOSED_FORM}, got {two_k}")
    with mpmath.workdps(WORKING_DPS):
        k = two_k // 2
        value = (-1) ** (k + 1) * mpmath.bernoulli(two_k) * (2 * mpmath.pi) ** two_k
        value /= 2 * mpmath.factorial(two_k)
        return float(value)


def coefficients(ks: Iterable[int], eps: Optional[float] = None) -> Coefficients:
    """All main-term constants for the requested k values."""
    eps = EngineConfig().zeta_eps if eps is None else eps
    ks = sorted(set(ks))
    bad = [k for k in ks if not 2 <= k <= MAX_K]
    if bad:
        raise PreconditionError(f"k must lie in [2, {MAX_K}], got {bad}")

    zeta2 = zeta(2, eps)
    zeta_k = {k: zeta(k, eps) for k in ks}
    zeta_2k = {k: zeta(2 * k, eps) for k in ks}
    for two_k, value in [(2, zeta2)] + [(2 * k, v) for k, v in zeta_2k.items()]:
        closed = even_zeta_closed_form(two_k)
        if abs(value - closed) > 2 * eps:
            raise InvariantViolation(
                f"zeta({two_k}) series {value!r} disagrees with closed form {closed!r}"
            )

    return Coefficients(
        eps=eps,
        zeta2=zeta2,
        zeta_k=zeta_k,
        zeta_2k=zeta_2k,
        thm3_stated=zeta2,
        thm3_consistent=zeta2 / 2,
        thm4_stated={k: zeta2 * zeta2 / (2 * z) for k, z in zeta_2k.items()},
        thm4_consistent={k: zeta2 / (2 * z) for k, z in zeta_2k.items()},
        alladi_erdos=math.pi ** 2 / 12,
        kfree_density={k: 1 / z for k, z in zeta_k.items()},
        dirichlet_weight={k: zeta2 / z for k, z in zeta_2k.items()},
    )
