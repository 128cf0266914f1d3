"""Small result record shared by the verification reports."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    residual: float
    tolerance: float
    vacuous: bool = False
    detail: str = ""


def residual_check(
    name: str,
    residual: float,
    bound: float,
    vacuous: bool = False,
    detail: str = "",
) -> CheckResult:
    """Pass iff the residual fits under the bound; vacuous checks always pass."""
    return CheckResult(name, vacuous or residual <= bound, residual, bound, vacuous, detail)
