"""Request and response models for the HTTP service.

Polynomials travel as [[v-exponent, coefficient-string], ...] in
ascending exponent order; coefficient strings keep arbitrary precision
integers intact across JSON. Series and residues use string coefficients
for the same reason. Nothing in the wire format is ever a float.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

Terms = list[tuple[int, str]]


class FactoredForm(BaseModel):
    """Cyclotomic factors stripped up to a bound, with the residual part."""

    limit: int
    factors: list[tuple[int, int]]
    residual: Terms
    residual_pretty: str


class PolynomialOut(BaseModel):
    terms: Terms
    pretty_v: str
    pretty_q: Optional[str] = None  # absent when the v-support is odd
    factored: Optional[FactoredForm] = None


class AlphaRequest(BaseModel):
    m: int = Field(ge=0)
    n: int = Field(ge=0)
    factor_limit: Optional[int] = Field(default=None, ge=1)


class XCoeffRequest(BaseModel):
    i: int = Field(ge=0)
    j: int = Field(ge=0)
    l: int = Field(ge=0)
    factor_limit: Optional[int] = Field(default=None, ge=1)


class DlTableRequest(BaseModel):
    l: int = Field(ge=1)
    m_max: int = Field(ge=0)
    n_max: int = Field(ge=0)


class DlTableOut(BaseModel):
    l: int
    m_max: int
    n_max: int
    cells: list[list[Optional[int]]]
    shaded: str
    csv: str


class MilnorRequest(BaseModel):
    colors: list[int]
    factor_limit: Optional[int] = Field(default=None, ge=1)


class BorromeanRequest(BaseModel):
    i: int = Field(ge=0)
    j: int = Field(ge=0)
    k: int = Field(ge=0)
    factor_limit: Optional[int] = Field(default=None, ge=1)


class SSumRequest(BaseModel):
    l: int = Field(ge=1)
    eps: int
    eps2: int
    factor_limit: Optional[int] = Field(default=None, ge=1)


class OmegaRequest(BaseModel):
    p: int
    n: int = Field(ge=0)


class MijkRequest(BaseModel):
    i: int
    j: int
    k: int
    level: int = Field(ge=0)


class SeriesRequest(BaseModel):
    order: int = Field(ge=0)


class LambdaRequest(BaseModel):
    i: int
    j: int
    k: int
    order: int = Field(ge=0)


class SeriesOut(BaseModel):
    order: int
    coeffs: list[str]


class EvalRootRequest(BaseModel):
    terms: Terms
    m: int = Field(ge=1)


class ResidueOut(BaseModel):
    m: int
    coeffs: list[str]


class VerifyRequest(BaseModel):
    level: Literal["fast", "full"] = "fast"
    checks: Optional[list[str]] = None


class VerifyOut(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    level: str
    passed: bool = Field(alias="pass")
    reports: list[dict]


class ErrorOut(BaseModel):
    error: str
    message: str
