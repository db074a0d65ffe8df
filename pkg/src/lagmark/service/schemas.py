"""Pydantic request and response models for the HTTP service."""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

SuiteName = Literal[
    "lemma31",
    "prop32",
    "prop41",
    "theoremA",
    "theorem11",
    "cor12",
    "trace_frobenius",
    "bound_ordering",
    "cor13",
    "integral_lemma",
]


class ComputeRequest(BaseModel):
    n: int = Field(ge=1, le=4000, description="polynomial degree")
    alpha: float = Field(gt=-1.0, description="Laguerre weight exponent")
    tol: float = Field(default=1e-12, ge=1e-14, le=1e-6)


class ComputeResponse(BaseModel):
    n: int
    alpha: float
    c: float
    c_squared: float
    residual: float
    iterations: int


class BoundEntryModel(BaseModel):
    id: str
    value: float
    applicable: bool
    hypothesis: str


class BoundsRequest(BaseModel):
    n: int = Field(ge=1, le=4000)
    alpha: float = Field(gt=-1.0)
    include_computed: bool = False
    tol: float = Field(default=1e-12, ge=1e-14, le=1e-6)


class BoundsResponse(BaseModel):
    n: int
    alpha: float
    computed_c_squared: Optional[float] = None
    bounds: list[BoundEntryModel]


class VerifyRequest(BaseModel):
    suite: SuiteName
    n_min: Optional[int] = Field(default=None, ge=1)
    n_max: Optional[int] = Field(default=None, ge=1)
    alpha_values: Optional[list[float]] = None
    seed: int = 42
    trials: int = Field(default=100, ge=1, le=100000)
    eps_list: Optional[list[float]] = None
    alpha_big: Optional[list[float]] = None


class SweepCaseModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    n: int
    alpha: float
    margin: float
    passed: bool = Field(serialization_alias="pass")
    detail: str


class VerifyResponse(BaseModel):
    suite: str
    all_pass: bool
    worst_margin: Optional[float] = None
    skipped: int
    cases: list[SweepCaseModel]


class AsymptoticRequest(BaseModel):
    alpha: float = Field(ge=0.0, description="restricted to alpha >= 0 by the zero finder's domain")
    n_max: int = Field(default=2000, ge=12, le=4000)
    tol: float = Field(default=1e-12, ge=1e-14, le=1e-6)


class AsymptoticResponse(BaseModel):
    alpha: float
    nu: float
    j_zero: float
    j_zero_residual: float
    c_asymptotic: float
    c_squared_lower: float
    c_squared_upper: float
    bound_ratio: float
    extrapolated: float
    relative_difference: float
    n_list: list[int]
