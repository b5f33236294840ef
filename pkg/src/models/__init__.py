from .arithmetic import (
    Factorization,
    FactorSieveBlock,
    KfreeBlock,
    PrimePower,
    PrimeTable,
)
from .config import EngineConfig, SumConfig, VerifyOptions, default_grid
from .reports import (
    Coefficients,
    DiscriminationReport,
    Eq12Result,
    Lemma2Result,
    TheoremCheckRow,
    VerificationTable,
)
from .sums import Checkpoint, PartialSums, RunReport

__all__ = [
    "Checkpoint",
    "Coefficients",
    "DiscriminationReport",
    "EngineConfig",
    "Eq12Result",
    "Factorization",
    "FactorSieveBlock",
    "KfreeBlock",
    "Lemma2Result",
    "PartialSums",
    "PrimePower",
    "PrimeTable",
    "RunReport",
    "SumConfig",
    "TheoremCheckRow",
    "VerificationTable",
    "VerifyOptions",
    "default_grid",
]
