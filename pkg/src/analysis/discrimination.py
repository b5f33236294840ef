"""
Constant discrimination: which candidate c makes sum / (c x^2 / ln x)
closest to 1 at the top of the grid.
"""
import logging
import math
from typing import List, Sequence, Tuple

from ..errors import PreconditionError
from ..models.reports import CandidateTrace, DiscriminationReport
from ..models.sums import RunReport
from .tables import column_table

logger = logging.getLogger(__name__)

MIN_DECADES = 2


def _trend(deviations: List[float]) -> float:
    first, last = deviations[0], deviations[-1]
    if first == 0:
        return 0.0 if last == 0 else math.inf
    return last / first


def discriminate(report: RunReport, target: str,
                 candidates: Sequence[Tuple[str, float]]) -> DiscriminationReport:
    """
    Verdict: smallest |ratio - 1| at the largest x; ties go to the candidate
    whose deviation shrank the most (smaller last/first), then to the one
    listed first.
    """
    if len(candidates) < 2:
        raise PreconditionError("discrimination needs at least two candidates")
    traces: List[CandidateTrace] = []
    xs: List[int] = []
    for label, c in candidates:
        rows = column_table(report, target, c)
        xs = [row.x for row in rows]
        deviations = [abs(row.ratio - 1.0) for row in rows]
        if len(rows) < 2 or xs[-1] < xs[0] * 10 ** MIN_DECADES:
            raise PreconditionError(
                f"grid must span at least {MIN_DECADES} decades above x=3, got {xs}"
            )
        traces.append(CandidateTrace(label=label, constant=c, deviations=deviations,
                                     trend=_trend(deviations)))

    ranked = sorted(range(len(traces)),
                    key=lambda i: (traces[i].deviations[-1], traces[i].trend, i))
    verdict = traces[ranked[0]].label
    logger.info(f"Discrimination on {target} at x={xs[-1]}: verdict {verdict}")
    return DiscriminationReport(target=target, xs=xs, candidates=traces, verdict=verdict)
