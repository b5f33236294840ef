import logging
from abc import ABC, abstractmethod
from typing import Any, ClassVar, Dict, List, Optional, Sequence, Type

from pydantic import BaseModel

from ..errors import PreconditionError
from ..models.config import EngineConfig, SumConfig, VerifyOptions
from ..models.reports import Cell, DiscriminationReport, VerificationTable
from ..models.sums import RunReport

logger = logging.getLogger(__name__)


class BaseVerifier(ABC):
    """One verify target: optionally consumes a summation run, emits a table."""

    name: ClassVar[str]
    needs_report: ClassVar[bool] = True
    requires_k: ClassVar[bool] = False
    default_ks: ClassVar[List[int]] = []

    def __init__(self, options: VerifyOptions, engine: Optional[EngineConfig] = None):
        if self.requires_k and not options.ks:
            raise PreconditionError(f"verify {self.name} requires --k")
        self.options = options
        self.engine = engine or EngineConfig()
        self.ks = list(options.ks or self.default_ks)

    def sum_config(self, config: SumConfig) -> SumConfig:
        """The summation run this target needs, derived from the CLI's config."""
        if not self.ks:
            return config
        return config.model_copy(update={"ks": sorted(set(config.ks) | set(self.ks))})

    def require_report(self, report: Optional[RunReport]) -> RunReport:
        if report is None or not report.checkpoints:
            raise PreconditionError(f"verify {self.name} needs a non-empty summation run")
        return report

    @abstractmethod
    def verify(self, report: Optional[RunReport]) -> VerificationTable:
        pass

    def build_table(
        self,
        model: Type[BaseModel],
        rows: Sequence[BaseModel],
        leading: Optional[Sequence[Dict[str, Cell]]] = None,
        discriminations: Optional[List[DiscriminationReport]] = None,
        parameters: Optional[Dict[str, Any]] = None,
    ) -> VerificationTable:
        """Flatten typed rows into a table, prefixing per-row extra cells."""
        extra = list(leading[0]) if leading else []
        columns = extra + list(model.model_fields)
        flat: List[Dict[str, Cell]] = []
        for i, row in enumerate(rows):
            cells: Dict[str, Cell] = dict(leading[i]) if leading else {}
            cells.update(row.model_dump())
            flat.append(cells)
        logger.debug(f"verify {self.name}: {len(flat)} rows")
        return VerificationTable(
            target=self.name,
            columns=columns,
            rows=flat,
            discriminations=discriminations or [],
            parameters=parameters or {},
        )
