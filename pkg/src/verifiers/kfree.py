"""
Verifiers for the k-free count, the k-free Dirichlet series and the
weighted-sum lemma.
"""
from math import floor, isqrt
from typing import Dict, List, Optional

from ..analysis.identities import eq12_check, lemma2_check
from ..analysis.tables import eq2_check
from ..arithmetic.sieve import kfree_flags, sieve_primes
from ..arithmetic.zeta import coefficients
from ..models.reports import Cell, Eq12Result, KfreeErrorRow, Lemma2Result, VerificationTable
from ..models.sums import RunReport
from .base import BaseVerifier


class Eq2Verifier(BaseVerifier):
    name = "eq2"
    requires_k = True

    def verify(self, report: Optional[RunReport]) -> VerificationTable:
        report = self.require_report(report)
        coeffs = coefficients(self.ks, self.engine.zeta_eps)
        rows: List[KfreeErrorRow] = []
        leading: List[Dict[str, Cell]] = []
        for k in self.ks:
            k_rows = eq2_check(report, k, coeffs.zeta_k[k])
            rows += k_rows
            leading += [{"k": k}] * len(k_rows)
        return self.build_table(KfreeErrorRow, rows, leading)


class Eq12Verifier(BaseVerifier):
    name = "eq12"
    needs_report = False
    default_ks = [2]

    def verify(self, report: Optional[RunReport]) -> VerificationTable:
        n = self.options.n
        base = sieve_primes(isqrt(n), self.engine)
        coeffs = coefficients(self.ks, self.engine.zeta_eps)
        rows: List[Eq12Result] = [
            eq12_check(k, n, kfree_flags(1, n + 1, k, base), coeffs.dirichlet_weight[k])
            for k in self.ks
        ]
        return self.build_table(Eq12Result, rows, parameters={"N": n})


class Lemma2Verifier(BaseVerifier):
    name = "lemma2"
    needs_report = False
    default_ks = [2]

    def verify(self, report: Optional[RunReport]) -> VerificationTable:
        xs = sorted(self.options.lemma_xs)
        top = isqrt(floor(xs[-1]))
        base = sieve_primes(isqrt(top), self.engine)
        coeffs = coefficients(self.ks, self.engine.zeta_eps)
        rows: List[Lemma2Result] = []
        for k in self.ks:
            flags = kfree_flags(1, top + 1, k, base)
            rows += [lemma2_check(x, k, flags, coeffs.dirichlet_weight[k]) for x in xs]
        return self.build_table(Lemma2Result, rows)
