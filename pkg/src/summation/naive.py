"""
Reference sums by trial division and the brute-force Kempner scan.

Shares nothing with the sieve path; used to check run_sums.
"""
from typing import Iterable, Optional

from ..arithmetic.kempner import kempner_bruteforce
from ..arithmetic.oracles import trial_division
from ..errors import PreconditionError
from ..models.sums import Checkpoint

NAIVE_BOUND = 10 ** 6


def sum_f_naive(x: int, ks: Optional[Iterable[int]] = None,
                orders: Optional[Iterable[int]] = None) -> Checkpoint:
    if x < 0:
        raise PreconditionError(f"x must be >= 0, got {x}")
    if x > NAIVE_BOUND:
        raise PreconditionError(f"naive sums stop at {NAIVE_BOUND}, got x={x}")
    ks = sorted(set(ks if ks is not None else [2, 3]))
    orders = sorted(set(orders if orders is not None else [2]))

    sum_f = sum_P = sum_f_hard = 0
    sum_f_kfree = {k: 0 for k in ks}
    count_kfree = {k: 0 for k in ks}
    sum_f_pow = {r: 0 for r in orders}
    for n in range(1, x + 1):
        exponents = trial_division(n)
        P = max(exponents) if exponents else 1
        f = kempner_bruteforce(n)
        sum_f += f
        sum_P += P
        if P * P <= n:
            sum_f_hard += f
        top = max(exponents.values(), default=0)
        for k in ks:
            if top < k:
                sum_f_kfree[k] += f
                count_kfree[k] += 1
        for r in orders:
            sum_f_pow[r] += f ** r

    return Checkpoint(
        x=x,
        sum_f=sum_f,
        sum_P=sum_P,
        sum_f_hard=sum_f_hard,
        sum_f_kfree=sum_f_kfree,
        count_kfree=count_kfree,
        sum_f_pow=sum_f_pow,
    )
