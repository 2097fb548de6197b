"""Pydantic request/response models for the verification service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

from ..identities import DEFAULT_WORD_CAP

IdentityTag = Literal[
    "THM1",
    "THM2",
    "LEM1",
    "LEM2_COMMUTANT",
    "PROP_EXPAN",
    "LEM3_1",
    "LEM3_2",
    "PROP_GENFUN",
    "PROP_TMN",
    "REMARK_14",
    "REMARK_15",
]


class NormalizeRequest(BaseModel):
    expression: str


class NormalizeResponse(BaseModel):
    input: str
    canonical: str


class ReportModel(BaseModel):
    identity: str
    params: dict[str, int | str]
    verdict: Literal["pass", "fail", "error"]
    lhs: str
    rhs: str
    detail: str = ""
    code: str = ""


class VerifyRequest(BaseModel):
    identity: IdentityTag
    m: Optional[tuple[int, int]] = Field(
        default=None, description="inclusive range for the first sweep parameter"
    )
    n: Optional[tuple[int, int]] = Field(
        default=None, description="inclusive range for the second sweep parameter"
    )
    cap: int = Field(default=DEFAULT_WORD_CAP, ge=0)
    seed: int = 0


class VerifyResponse(BaseModel):
    identity: str
    reports: list[ReportModel]
    passed: int
    failed: int
    errors: int
    all_pass: bool


class SuiteRequest(BaseModel):
    max_total_degree: int = Field(default=6, ge=0)
    cap: int = Field(default=DEFAULT_WORD_CAP, ge=0)
    commutant_trials: int = Field(default=10, ge=0)
    seed: int = 0


class TableRequest(BaseModel):
    kind: Literal["tmn", "mp"]
    max: int = Field(default=4, ge=0)
    alpha: str = "1/2"
    cap: int = Field(default=DEFAULT_WORD_CAP, ge=0)


class TmnRow(BaseModel):
    m: int
    n: int
    words: int
    canonical: str


class MpRow(BaseModel):
    n: int
    alpha: str
    coefficients: list[str]
    rendered: str


class TableResponse(BaseModel):
    kind: str
    tmn_rows: list[TmnRow] = []
    mp_rows: list[MpRow] = []


class BenchRequest(BaseModel):
    max: int = Field(default=5, ge=0)
    reps: int = Field(default=3, ge=1)
    cap: int = Field(default=DEFAULT_WORD_CAP, ge=0)


class BenchRowModel(BaseModel):
    m: int
    n: int
    words: int
    closed_ms: float
    rewrite_ms: float
    speedup: float


class BenchResponse(BaseModel):
    rows: list[BenchRowModel]


class IdentityDescription(BaseModel):
    tag: str
    summary: str
    first_param: str
    first_default: tuple[int, int]
    second_param: Optional[str] = None
    second_default: Optional[tuple[int, int]] = None
    fixed: str = ""


class ErrorBody(BaseModel):
    code: str
    message: str
    line: Optional[int] = None
    column: Optional[int] = None
