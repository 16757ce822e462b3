"""
Report models shared by the report-style validators.
"""

from typing import Any, List, Optional
from pydantic import BaseModel, Field


class Violation(BaseModel):
    """One violated condition."""
    code: str
    message: str
    witness: Optional[Any] = None


class Report(BaseModel):
    """Outcome of a validator: empty violation list means valid."""
    subject: str
    violations: List[Violation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, code: str, message: str, witness: Optional[Any] = None) -> None:
        self.violations.append(Violation(code=code, message=message, witness=witness))

    def codes(self) -> List[str]:
        return [v.code for v in self.violations]

    def summary(self, limit: int = 10) -> str:
        if self.ok:
            return f"{self.subject}: ok"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        for violation in self.violations[:limit]:
            lines.append(f"  [{violation.code}] {violation.message}")
        if len(self.violations) > limit:
            lines.append(f"  ... {len(self.violations) - limit} more")
        return "\n".join(lines)
