"""
Report models shared by the kernel condition checks and the estimate suites.

Reports are values, not exceptions: every check records its margin (positive
or zero means satisfied) so the CLI can write them out and choose an exit code.
"""
from typing import List, Optional

from pydantic import BaseModel, Field


class CheckResult(BaseModel):
    """Outcome of a single numerical check."""

    name: str = Field(..., description="Short identifier of the check")
    passed: bool
    margin: Optional[float] = Field(
        None, description="Bound minus measured value; >= 0 when satisfied")
    skipped: bool = False
    detail: str = ""


class PropertyReport(BaseModel):
    """Collection of checks of a solution against its theoretical estimates."""

    subject: str
    checks: List[CheckResult] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed or check.skipped for check in self.checks)

    def add(self, name: str, margin: float, detail: str = "", slack: float = 0.0) -> CheckResult:
        """Record a margin-valued check; passes when margin >= -slack."""
        result = CheckResult(name=name, passed=bool(margin >= -slack), margin=float(margin), detail=detail)
        self.checks.append(result)
        return result

    def skip(self, name: str, detail: str) -> CheckResult:
        result = CheckResult(name=name, passed=True, skipped=True, detail=detail)
        self.checks.append(result)
        return result

    def get(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def summary(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": [check.model_dump() for check in self.checks],
            "warnings": list(self.warnings),
        }


class ConditionReport(PropertyReport):
    """
    Spot checks of the structural conditions of a kernel.

    Only necessary conditions are tested numerically; passing does not prove
    that a custom kernel is admissible.
    """

    necessary_only: bool = True
    note: str = (
        "numeric spot checks of necessary conditions only; the Stieltjes property "
        "of the Laplace transform and negative definiteness of the symbol are not "
        "decided for custom kernels"
    )

    def summary(self) -> dict:
        return {**super().summary(), "necessary_only": self.necessary_only, "note": self.note}
