"""
Verifiers comparing exact sums with x^2 / ln x main terms, the hard-case
bound and the moment shape.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..analysis.discrimination import discriminate
from ..analysis.tables import (
    ALLADI_ERDOS,
    eq1_table,
    eq5_table,
    moment_fit,
    theorem3_table,
    theorem4_table,
)
from ..arithmetic.zeta import coefficients
from ..errors import PreconditionError
from ..models.reports import (
    Cell,
    DiscriminationReport,
    HardCaseRow,
    MomentRow,
    TheoremCheckRow,
    VerificationTable,
)
from ..models.sums import RunReport
from .base import BaseVerifier

logger = logging.getLogger(__name__)


def _try_discriminate(report: RunReport, column: str,
                      candidates: Sequence[Tuple[str, float]]) -> Optional[DiscriminationReport]:
    try:
        return discriminate(report, column, candidates)
    except PreconditionError as e:
        logger.warning(f"No verdict for {column}: {e}")
        return None


class _CandidateVerifier(BaseVerifier):
    """Rows for every candidate constant, plus a verdict per compared sum."""

    def candidate_rows(self, report: RunReport, column: str,
                       candidates: Sequence[Tuple[str, float]],
                       extra: Optional[Dict[str, Cell]] = None):
        verdict = _try_discriminate(report, column, candidates)
        rows: List[TheoremCheckRow] = []
        leading: List[Dict[str, Cell]] = []
        for label, c in candidates:
            for row in self.rows_for(report, column, c):
                rows.append(row)
                leading.append({**(extra or {}), "candidate": label,
                                "verdict": verdict.verdict if verdict else ""})
        return rows, leading, verdict

    def rows_for(self, report: RunReport, column: str, c: float) -> List[TheoremCheckRow]:
        return theorem3_table(report, c)


class Theorem3Verifier(_CandidateVerifier):
    name = "theorem3"

    def verify(self, report: Optional[RunReport]) -> VerificationTable:
        report = self.require_report(report)
        coeffs = coefficients([2], self.engine.zeta_eps)
        candidates = [("zeta(2)", coeffs.thm3_stated), ("zeta(2)/2", coeffs.thm3_consistent)]
        rows, leading, verdict = self.candidate_rows(report, "sum_f", candidates)
        return self.build_table(TheoremCheckRow, rows, leading,
                                [verdict] if verdict else [],
                                {"candidates": dict(candidates)})


class Theorem4Verifier(_CandidateVerifier):
    name = "theorem4"
    requires_k = True

    def rows_for(self, report: RunReport, column: str, c: float) -> List[TheoremCheckRow]:
        return theorem4_table(report, int(column.rsplit("_", 1)[1]), c)

    def verify(self, report: Optional[RunReport]) -> VerificationTable:
        report = self.require_report(report)
        coeffs = coefficients(self.ks, self.engine.zeta_eps)
        rows: List[TheoremCheckRow] = []
        leading: List[Dict[str, Cell]] = []
        verdicts: List[DiscriminationReport] = []
        parameters = {}
        for k in self.ks:
            candidates = [
                ("zeta(2)^2/(2 zeta(2k))", coeffs.thm4_stated[k]),
                ("zeta(2)/(2 zeta(2k))", coeffs.thm4_consistent[k]),
            ]
            k_rows, k_leading, verdict = self.candidate_rows(
                report, f"sum_f_kfree_{k}", candidates, {"k": k}
            )
            rows += k_rows
            leading += k_leading
            if verdict:
                verdicts.append(verdict)
            parameters[f"k={k}"] = dict(candidates)
        return self.build_table(TheoremCheckRow, rows, leading, verdicts, parameters)


class Eq1Verifier(BaseVerifier):
    name = "eq1"

    def verify(self, report: Optional[RunReport]) -> VerificationTable:
        report = self.require_report(report)
        return self.build_table(TheoremCheckRow, eq1_table(report),
                                parameters={"constant": ALLADI_ERDOS})


class Eq5Verifier(BaseVerifier):
    name = "eq5"

    def verify(self, report: Optional[RunReport]) -> VerificationTable:
        report = self.require_report(report)
        return self.build_table(HardCaseRow, eq5_table(report))


class MomentsVerifier(BaseVerifier):
    name = "moments"

    def verify(self, report: Optional[RunReport]) -> VerificationTable:
        report = self.require_report(report)
        rows: List[MomentRow] = []
        for r in report.moment_orders:
            rows += moment_fit(report, r)
        return self.build_table(MomentRow, rows)
