"""
Asymptotic comparison tables built from exact checkpoint sums.

log is the natural logarithm throughout. Every function is a pure
function of its inputs, so re-running it on a stored report reproduces
the same rows.
"""
import math
from typing import Iterable, List, Optional

from ..arithmetic.zeta import zeta
from ..errors import PreconditionError
from ..models.arithmetic import PrimeTable
from ..models.reports import (
    HardCaseRow,
    KfreeErrorRow,
    MomentRow,
    PrimeCountRow,
    PrimeSumRow,
    TheoremCheckRow,
)
from ..models.sums import RunReport

ALLADI_ERDOS = math.pi ** 2 / 12


def check_row(x: int, empirical: int, c: float) -> TheoremCheckRow:
    """Compare empirical against c * x^2 / ln x."""
    log_x = math.log(x)
    scale = x * x / (log_x * log_x)
    main_term = c * x * x / log_x
    residual = (empirical - main_term) / scale
    return TheoremCheckRow(
        x=x,
        empirical=empirical,
        constant=c,
        main_term=main_term,
        ratio=empirical / main_term,
        implied_constant=abs(residual),
        residual=residual,
    )


def column_table(report: RunReport, column: str, c: float) -> List[TheoremCheckRow]:
    if c <= 0:
        raise PreconditionError(f"constant must be positive, got {c}")
    return [check_row(cp.x, cp.value(column), c) for cp in report.checkpoints if cp.x >= 3]


def theorem3_table(report: RunReport, c: float) -> List[TheoremCheckRow]:
    """sum_{n<=x} f(n) against c x^2 / ln x."""
    return column_table(report, "sum_f", c)


def theorem4_table(report: RunReport, k: int, c: float) -> List[TheoremCheckRow]:
    """sum of f over k-free n <= x against c x^2 / ln x."""
    if k not in report.ks:
        raise PreconditionError(f"k={k} was not accumulated; run had ks={report.ks}")
    return column_table(report, f"sum_f_kfree_{k}", c)


def eq1_table(report: RunReport) -> List[TheoremCheckRow]:
    """sum_{n<=x} P(n) against (pi^2/12) x^2 / ln x."""
    return column_table(report, "sum_P", ALLADI_ERDOS)


def eq2_check(report: RunReport, k: int, zeta_k: Optional[float] = None) -> List[KfreeErrorRow]:
    """|S_k(x) - x/zeta(k)| / x^(1/k) per checkpoint."""
    if k not in report.ks:
        raise PreconditionError(f"k={k} was not accumulated; run had ks={report.ks}")
    zeta_k = zeta(k) if zeta_k is None else zeta_k
    rows = []
    for cp in report.checkpoints:
        count = cp.count_kfree[k]
        main_term = cp.x / zeta_k
        rows.append(KfreeErrorRow(
            x=cp.x,
            count=count,
            main_term=main_term,
            error_scaled=abs(count - main_term) / cp.x ** (1.0 / k),
        ))
    return rows


def eq5_table(report: RunReport) -> List[HardCaseRow]:
    """Hard-case sum scaled by x^(3/2) ln x."""
    return [
        HardCaseRow(x=cp.x, sum_f_hard=cp.sum_f_hard,
                    scaled=cp.sum_f_hard / (cp.x ** 1.5 * math.log(cp.x)))
        for cp in report.checkpoints if cp.x >= 2
    ]


def moment_fit(report: RunReport, r: int) -> List[MomentRow]:
    """C_r estimates sum f(n)^r * ln^r x / x^(r+1)."""
    if r not in report.moment_orders:
        raise PreconditionError(
            f"moment order {r} was not accumulated; run had {report.moment_orders}"
        )
    return [
        MomentRow(x=cp.x, r=r,
                  c_r_estimate=cp.sum_f_pow[r] * math.log(cp.x) ** r / cp.x ** (r + 1))
        for cp in report.checkpoints if cp.x >= 2
    ]


def _check_table_covers(table: PrimeTable, grid: Iterable[int]) -> List[int]:
    xs = [x for x in grid if x >= 2]
    if xs and max(xs) > table.limit:
        raise PreconditionError(f"prime table to {table.limit} does not cover x={max(xs)}")
    return xs


def eq7_table(table: PrimeTable, grid: Iterable[int]) -> List[PrimeCountRow]:
    """Exact pi(x) beside the x / ln x approximation."""
    rows = []
    for x in _check_table_covers(table, grid):
        approximation = x / math.log(x)
        pi_x = table.pi(x)
        rows.append(PrimeCountRow(x=x, pi_x=pi_x, approximation=approximation,
                                  ratio=pi_x / approximation))
    return rows


def eq9_table(table: PrimeTable, grid: Iterable[int]) -> List[PrimeSumRow]:
    """Sum of primes up to x against x^2 / (2 ln x)."""
    xs = _check_table_covers(table, grid)
    rows = []
    total, taken = 0, 0
    primes = table.primes.tolist()
    for x in sorted(xs):
        while taken < len(primes) and primes[taken] <= x:
            total += primes[taken]
            taken += 1
        main_term = x * x / (2 * math.log(x))
        rows.append(PrimeSumRow(x=x, prime_sum=total, main_term=main_term,
                                ratio=total / main_term))
    return rows
