"""
Verifiers for the prime count and the prime sum, read straight off a
prime table sieved to the top of the grid.
"""
from typing import List, Optional

from ..analysis.tables import eq7_table, eq9_table
from ..arithmetic.sieve import sieve_primes
from ..errors import PreconditionError
from ..models.arithmetic import PrimeTable
from ..models.reports import PrimeCountRow, PrimeSumRow, VerificationTable
from ..models.sums import RunReport
from .base import BaseVerifier


class _PrimeTableVerifier(BaseVerifier):
    needs_report = False

    def prime_table(self) -> PrimeTable:
        if not self.options.grid:
            raise PreconditionError(f"verify {self.name} needs a checkpoint grid")
        return sieve_primes(self.options.grid[-1], self.engine)

    @property
    def grid(self) -> List[int]:
        return list(self.options.grid)


class Eq7Verifier(_PrimeTableVerifier):
    name = "eq7"

    def verify(self, report: Optional[RunReport]) -> VerificationTable:
        return self.build_table(PrimeCountRow, eq7_table(self.prime_table(), self.grid))


class Eq9Verifier(_PrimeTableVerifier):
    name = "eq9"

    def verify(self, report: Optional[RunReport]) -> VerificationTable:
        return self.build_table(PrimeSumRow, eq9_table(self.prime_table(), self.grid))
