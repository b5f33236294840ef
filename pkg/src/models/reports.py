"""
Models for zeta-derived constants and asymptotic comparison tables.
"""
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field, model_validator

Cell = Union[int, float, str, bool]


class Coefficients(BaseModel):
    """Main-term constants, each certified to the configured absolute error."""
    eps: float = Field(..., description="Certified absolute error of every field")
    zeta2: float
    zeta_k: Dict[int, float] = Field(default_factory=dict, description="zeta(k) per k")
    zeta_2k: Dict[int, float] = Field(default_factory=dict, description="zeta(2k) per k")
    thm3_stated: float = Field(..., description="zeta(2), the constant as printed")
    thm3_consistent: float = Field(..., description="zeta(2)/2, implied by the prime-sum chain")
    thm4_stated: Dict[int, float] = Field(default_factory=dict,
                                          description="zeta(2)^2 / (2 zeta(2k)) per k")
    thm4_consistent: Dict[int, float] = Field(default_factory=dict,
                                              description="zeta(2) / (2 zeta(2k)) per k")
    alladi_erdos: float = Field(..., description="pi^2/12")
    kfree_density: Dict[int, float] = Field(default_factory=dict, description="1/zeta(k) per k")
    dirichlet_weight: Dict[int, float] = Field(default_factory=dict,
                                               description="zeta(2)/zeta(2k) per k")

    @model_validator(mode="after")
    def _check_relations(self) -> "Coefficients":
        if abs(self.thm3_consistent - self.alladi_erdos) > 1e-12:
            raise ValueError("zeta(2)/2 and pi^2/12 disagree")
        for k, stated in self.thm4_stated.items():
            if abs(stated / self.thm4_consistent[k] - self.zeta2) > 1e-10:
                raise ValueError(f"stated/consistent ratio for k={k} is not zeta(2)")
        ks = sorted(self.thm4_stated)
        for a, b in zip(ks, ks[1:]):
            if not (self.thm4_stated[a] < self.thm4_stated[b]
                    and self.thm4_consistent[a] < self.thm4_consistent[b]):
                raise ValueError("Theorem 4 constants must increase with k")
        return self


class TheoremCheckRow(BaseModel):
    """One comparison of an exact sum against c * x^2 / ln x."""
    x: int
    empirical: int
    constant: float = Field(..., description="Candidate main-term constant c")
    main_term: float
    ratio: float
    implied_constant: float = Field(..., description="|empirical - main| * ln^2 x / x^2")
    residual: float = Field(..., description="Signed (empirical - main) * ln^2 x / x^2")


class KfreeErrorRow(BaseModel):
    x: int
    count: int
    main_term: float
    error_scaled: float = Field(..., description="|S_k(x) - x/zeta(k)| / x^(1/k)")


class HardCaseRow(BaseModel):
    x: int
    sum_f_hard: int
    scaled: float = Field(..., description="sum_f_hard / (x^(3/2) ln x)")


class MomentRow(BaseModel):
    x: int
    r: int
    c_r_estimate: float


class PrimeCountRow(BaseModel):
    x: int
    pi_x: int
    approximation: float = Field(..., description="x / ln x")
    ratio: float


class PrimeSumRow(BaseModel):
    x: int
    prime_sum: int
    main_term: float = Field(..., description="x^2 / (2 ln x)")
    ratio: float


class Lemma2Result(BaseModel):
    x: float
    k: int
    lhs: float
    rhs: float
    scaled_diff: float = Field(..., description="|lhs - rhs| * ln^2 x")


class Eq12Result(BaseModel):
    k: int
    N: int
    partial: float
    target: float
    diff: float
    tail_bound: float = Field(..., description="1/N + 1e-12")


class CandidateTrace(BaseModel):
    label: str
    constant: float
    deviations: List[float] = Field(..., description="|ratio - 1| per grid point")
    trend: float = Field(..., description="last / first deviation")


class DiscriminationReport(BaseModel):
    """Which candidate constant tracks the exact sum best."""
    target: str
    xs: List[int]
    candidates: List[CandidateTrace]
    verdict: str

    @model_validator(mode="after")
    def _verdict_known(self) -> "DiscriminationReport":
        if self.verdict not in {c.label for c in self.candidates}:
            raise ValueError(f"verdict {self.verdict!r} is not a supplied candidate")
        return self


class VerificationTable(BaseModel):
    """Output of one verify target: a flat table plus optional verdicts."""
    target: str
    columns: List[str]
    rows: List[Dict[str, Cell]] = Field(default_factory=list)
    discriminations: List[DiscriminationReport] = Field(default_factory=list)
    parameters: Dict[str, Any] = Field(default_factory=dict)
