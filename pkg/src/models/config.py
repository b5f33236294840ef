"""
Configuration models for the engine and for summation runs.
"""
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

GRID_START = 10 ** 3
GRID_STEPS_PER_DECADE = 4
MAX_K = 10
MAX_MOMENT = 4


def default_grid(x_max: int, start: int = GRID_START,
                 steps_per_decade: int = GRID_STEPS_PER_DECADE) -> List[int]:
    """Geometric grid with ratio 10^(1/steps) from start, always ending at x_max."""
    grid: List[int] = []
    j = 0
    while True:
        x = int(round(start * 10 ** (j / steps_per_decade)))
        if x >= x_max:
            break
        if not grid or x > grid[-1]:
            grid.append(x)
        j += 1
    grid.append(x_max)
    return grid


class EngineConfig(BaseModel):
    """Limits shared by the sieve, oracle and zeta layers."""
    block_size: int = Field(default=2 ** 20, ge=1, description="Integers per sieve block")
    max_prime_limit: int = Field(default=5 * 10 ** 8, ge=1,
                                 description="Largest limit sieve_primes will allocate")
    oracle_bound: int = Field(default=10 ** 7, ge=1,
                              description="Largest n accepted by the brute-force oracle")
    max_x: int = Field(default=10 ** 10, ge=1, description="Largest supported x_max")
    zeta_eps: float = Field(default=1e-12, gt=0, description="Certified zeta error")


class SumConfig(BaseModel):
    """Configuration for one summation run over [1, x_max]."""
    x_max: int = Field(..., ge=1, description="Upper end of the summation range")
    grid: Optional[List[int]] = Field(
        default=None, description="Ascending checkpoint values; defaults to a geometric grid"
    )
    ks: List[int] = Field(default_factory=lambda: [2, 3], description="k-free variants")
    moment_orders: List[int] = Field(default_factory=lambda: [2], description="Moment orders r")
    block_size: int = Field(default=2 ** 20, ge=1, description="Integers per sieve block")
    workers: int = Field(default=1, ge=1, description="Worker processes")
    cross_check: bool = Field(
        default=False, description="Compare k-free flags against factor exponents per block"
    )

    @model_validator(mode="after")
    def _normalise(self) -> "SumConfig":
        if self.grid is None or not self.grid:
            self.grid = default_grid(self.x_max)
        grid = self.grid
        if any(x < 1 for x in grid):
            raise ValueError("grid values must be >= 1")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError("grid must be strictly ascending")
        if grid[-1] != self.x_max:
            raise ValueError(f"grid must end at x_max={self.x_max}, got {grid[-1]}")
        if any(not 2 <= k <= MAX_K for k in self.ks):
            raise ValueError(f"every k must lie in [2, {MAX_K}]")
        if any(not 2 <= r <= MAX_MOMENT for r in self.moment_orders):
            raise ValueError(f"every moment order must lie in [2, {MAX_MOMENT}]")
        self.ks = sorted(set(self.ks))
        self.moment_orders = sorted(set(self.moment_orders))
        return self

    @property
    def checkpoints(self) -> List[int]:
        return list(self.grid or [])


class VerifyOptions(BaseModel):
    """Parameters of one verify target beyond the summation run."""
    target: str = Field(..., description="Verify target name")
    ks: List[int] = Field(default_factory=list, description="k values (theorem4, eq2, eq12, lemma2)")
    n: int = Field(default=10 ** 6, ge=1, description="Partial-sum length for eq12")
    lemma_xs: List[float] = Field(default_factory=lambda: [1e4, 1e6, 1e8],
                                  description="x values for lemma2")
    grid: List[int] = Field(default_factory=list, description="Checkpoint grid for eq7 and eq9")

    @model_validator(mode="after")
    def _check_ks(self) -> "VerifyOptions":
        if any(not 2 <= k <= MAX_K for k in self.ks):
            raise ValueError(f"every k must lie in [2, {MAX_K}]")
        self.ks = sorted(set(self.ks))
        return self
