from .discrimination import discriminate
from .identities import eq12_check, lemma2_check
from .tables import (
    ALLADI_ERDOS,
    eq1_table,
    eq2_check,
    eq5_table,
    eq7_table,
    eq9_table,
    moment_fit,
    theorem3_table,
    theorem4_table,
)

__all__ = [
    "ALLADI_ERDOS",
    "discriminate",
    "eq12_check",
    "eq1_table",
    "eq2_check",
    "eq5_table",
    "eq7_table",
    "eq9_table",
    "lemma2_check",
    "moment_fit",
    "theorem3_table",
    "theorem4_table",
]
