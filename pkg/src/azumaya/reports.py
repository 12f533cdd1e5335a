"""Request and report models for the service and the CLI.

Scalars travel as exact strings; the report echoes its input, carries
per-check results with witnesses, the determinants each route produced,
and timing.  Exit codes are a pure function of the report.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

ScalarIn = str | int
Route = Literal["theta", "fg", "det"]
CheckName = Literal[
    "hopf", "cocycle", "rform", "comodule", "integrals", "twisted-antipode"
]


class EnCheckRequest(BaseModel):
    n: int = Field(ge=1, le=4)
    field: str = "rational"
    a: list[list[ScalarIn]]
    alpha: ScalarIn = "1"
    gamma: list[ScalarIn] | None = None
    lam: list[list[ScalarIn]] | None = None
    routes: list[Route] = ["theta", "fg", "det"]
    structural_checks: bool = False


class TableRequest(BaseModel):
    n: int = Field(ge=1, le=3)
    field: str = "rational"
    a: list[list[ScalarIn]]
    alpha: ScalarIn = "1"
    gamma: list[ScalarIn] | None = None
    lam: list[list[ScalarIn]] | None = None


class VerifyRequest(BaseModel):
    document: dict
    checks: list[CheckName] | None = None


class SweepRequest(BaseModel):
    n: int = Field(ge=1, le=4)
    field: str = "rational"
    points: int = Field(default=50, ge=1, le=10000)
    seed: int = 0
    low: int = -2
    high: int = 2
    alphas: list[ScalarIn] = ["1", "2"]
    routes: list[Route] = ["theta", "fg", "det"]


class CheckResultModel(BaseModel):
    name: str
    passed: bool
    witness: str | None = None


class RouteEvidence(BaseModel):
    route: Route
    azumaya: bool
    determinants: dict[str, str]


class VerdictReport(BaseModel):
    schema_version: Literal[1] = 1
    command: Literal["en-check", "verify"]
    input: dict
    field: str
    checks: list[CheckResultModel] = []
    routes: list[RouteEvidence] = []
    azumaya: bool | None = None
    consistent: bool = True
    error: str | None = None
    elapsed_seconds: float = 0.0


class TableEntryModel(BaseModel):
    family: str
    left: str
    right: str
    computed: str
    expected: str
    match: bool


class TableReport(BaseModel):
    schema_version: Literal[1] = 1
    command: Literal["table"] = "table"
    input: dict
    field: str
    entries: list[TableEntryModel] = []
    all_match: bool = True
    error: str | None = None
    elapsed_seconds: float = 0.0


class SweepPoint(BaseModel):
    index: int
    params: dict
    azumaya: bool
    consistent: bool
    determinants: dict[str, str]


class SweepReport(BaseModel):
    schema_version: Literal[1] = 1
    command: Literal["sweep"] = "sweep"
    input: dict
    field: str
    points: list[SweepPoint] = []
    disagreements: list[int] = []
    azumaya_count: int = 0
    all_consistent: bool = True
    error: str | None = None
    elapsed_seconds: float = 0.0


Report = VerdictReport | TableReport | SweepReport


def exit_code(report: Report) -> int:
    """0 = positive verdict, 1 = negative verdict, 2 = input error,
    3 = internal disagreement between routes (a bug, never truth)."""
    if report.error is not None:
        return 2
    if isinstance(report, VerdictReport):
        if not report.consistent:
            return 3
        if report.command == "en-check":
            return 0 if report.azumaya else 1
        return 0 if all(c.passed for c in report.checks) else 1
    if isinstance(report, TableReport):
        return 0 if report.all_match else 3
    if isinstance(report, SweepReport):
        return 0 if report.all_consistent else 3
    raise TypeError(f"unknown report type {type(report)!r}")
