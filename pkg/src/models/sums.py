"""
Exact partial sums, checkpoints and run reports.
"""
from typing import Dict, Iterable, List, Optional

from pydantic import BaseModel, Field

from ..errors import InvariantViolation
from .config import SumConfig

N1_CONVENTION = (
    "n = 1 has P(1) = 1 and P(1)^2 <= 1, so it is counted in sum_f_hard (contributes f(1) = 1)"
)


def _nested_pairs(values: Dict[int, int]) -> Iterable[tuple]:
    ks = sorted(values)
    return zip(ks, ks[1:])


class PartialSums(BaseModel):
    """Exact sums over the half-open range [start, stop)."""
    start: int = Field(default=1, ge=1)
    stop: int = Field(default=1, ge=1)
    sum_f: int = 0
    sum_P: int = 0
    sum_f_hard: int = 0
    sum_f_kfree: Dict[int, int] = Field(default_factory=dict)
    count_kfree: Dict[int, int] = Field(default_factory=dict)
    sum_f_pow: Dict[int, int] = Field(default_factory=dict)

    @classmethod
    def empty(cls, ks: Iterable[int], orders: Iterable[int], start: int = 1) -> "PartialSums":
        ks, orders = list(ks), list(orders)
        return cls(
            start=start,
            stop=start,
            sum_f_kfree={k: 0 for k in ks},
            count_kfree={k: 0 for k in ks},
            sum_f_pow={r: 0 for r in orders},
        )

    def merge(self, other: "PartialSums") -> "PartialSums":
        """Append the sums of the range immediately following this one."""
        if other.start != self.stop:
            raise InvariantViolation(
                f"cannot merge [{other.start}, {other.stop}) after [{self.start}, {self.stop})"
            )
        if set(other.sum_f_kfree) != set(self.sum_f_kfree) or set(other.sum_f_pow) != set(self.sum_f_pow):
            raise InvariantViolation("partial sums track different accumulators")
        return PartialSums(
            start=self.start,
            stop=other.stop,
            sum_f=self.sum_f + other.sum_f,
            sum_P=self.sum_P + other.sum_P,
            sum_f_hard=self.sum_f_hard + other.sum_f_hard,
            sum_f_kfree={k: v + other.sum_f_kfree[k] for k, v in self.sum_f_kfree.items()},
            count_kfree={k: v + other.count_kfree[k] for k, v in self.count_kfree.items()},
            sum_f_pow={r: v + other.sum_f_pow[r] for r, v in self.sum_f_pow.items()},
        )

    def check_invariants(self) -> None:
        span = self.stop - self.start
        if self.sum_f < self.sum_P:
            raise InvariantViolation(f"sum_f {self.sum_f} < sum_P {self.sum_P}")
        if self.sum_f_hard > self.sum_f:
            raise InvariantViolation("sum_f_hard exceeds sum_f")
        for k, v in self.sum_f_kfree.items():
            if v > self.sum_f:
                raise InvariantViolation(f"sum_f_kfree[{k}] exceeds sum_f")
            if not 0 <= self.count_kfree[k] <= span:
                raise InvariantViolation(f"count_kfree[{k}] outside [0, {span}]")
        for a, b in _nested_pairs(self.sum_f_kfree):
            if self.sum_f_kfree[a] > self.sum_f_kfree[b]:
                raise InvariantViolation(f"sum_f_kfree[{a}] > sum_f_kfree[{b}]")

    def to_checkpoint(self) -> "Checkpoint":
        if self.start != 1:
            raise InvariantViolation("checkpoints need sums starting at n = 1")
        return Checkpoint(
            x=self.stop - 1,
            sum_f=self.sum_f,
            sum_P=self.sum_P,
            sum_f_hard=self.sum_f_hard,
            sum_f_kfree=dict(self.sum_f_kfree),
            count_kfree=dict(self.count_kfree),
            sum_f_pow=dict(self.sum_f_pow),
        )


class Checkpoint(BaseModel):
    """Exact sums over 1 <= n <= x."""
    x: int = Field(..., ge=0)
    sum_f: int = Field(..., description="Sum of f(n)")
    sum_P: int = Field(..., description="Sum of P(n)")
    sum_f_hard: int = Field(..., description="Sum of f(n) over n with P(n)^2 <= n")
    sum_f_kfree: Dict[int, int] = Field(default_factory=dict, description="Sum of f(n), n k-free")
    count_kfree: Dict[int, int] = Field(default_factory=dict, description="S_k(x)")
    sum_f_pow: Dict[int, int] = Field(default_factory=dict, description="Sum of f(n)^r")

    @staticmethod
    def columns(ks: Iterable[int], orders: Iterable[int]) -> List[str]:
        ks, orders = sorted(ks), sorted(orders)
        return (
            ["x", "sum_f", "sum_P", "sum_f_hard"]
            + [f"count_kfree_{k}" for k in ks]
            + [f"sum_f_kfree_{k}" for k in ks]
            + [f"sum_f_pow_{r}" for r in orders]
        )

    def value(self, column: str) -> int:
        if column in ("x", "sum_f", "sum_P", "sum_f_hard"):
            return getattr(self, column)
        for prefix, table in (
            ("count_kfree_", self.count_kfree),
            ("sum_f_kfree_", self.sum_f_kfree),
            ("sum_f_pow_", self.sum_f_pow),
        ):
            if column.startswith(prefix):
                key = int(column[len(prefix):])
                if key not in table:
                    raise KeyError(f"{column} was not accumulated in this run")
                return table[key]
        raise KeyError(f"unknown checkpoint column {column!r}")

    def row(self) -> List[int]:
        return [self.value(c) for c in self.columns(self.count_kfree, self.sum_f_pow)]

    def check_invariants(self, previous: Optional["Checkpoint"] = None) -> None:
        PartialSums(
            start=1,
            stop=self.x + 1,
            sum_f=self.sum_f,
            sum_P=self.sum_P,
            sum_f_hard=self.sum_f_hard,
            sum_f_kfree=self.sum_f_kfree,
            count_kfree=self.count_kfree,
            sum_f_pow=self.sum_f_pow,
        ).check_invariants()
        if previous is None:
            return
        if previous.x >= self.x:
            raise InvariantViolation("checkpoints out of order")
        mine = self.row()
        for column, before, after in zip(self.columns(self.count_kfree, self.sum_f_pow),
                                         previous.row(), mine):
            if after < before:
                raise InvariantViolation(f"{column} decreased between x={previous.x} and x={self.x}")


class RunReport(BaseModel):
    """Ordered checkpoints of one summation run plus timing metadata."""
    config: SumConfig
    checkpoints: List[Checkpoint] = Field(default_factory=list)
    started_at: Optional[str] = Field(None, description="UTC start time, ISO 8601")
    elapsed_seconds: Optional[float] = Field(None, description="Wall time of the run")
    notes: List[str] = Field(default_factory=lambda: [N1_CONVENTION])

    @property
    def ks(self) -> List[int]:
        return list(self.config.ks)

    @property
    def moment_orders(self) -> List[int]:
        return list(self.config.moment_orders)

    def checkpoint_at(self, x: int) -> Checkpoint:
        for cp in self.checkpoints:
            if cp.x == x:
                return cp
        raise KeyError(f"no checkpoint at x={x}")
