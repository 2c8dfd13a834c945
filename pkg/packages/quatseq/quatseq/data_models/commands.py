"""
Result of a single CLI command.
"""

from enum import IntEnum
from typing import Any

from pydantic import BaseModel, Field, model_validator


class ExitCode(IntEnum):
    OK = 0
    PROPERTY_FAILURE = 1
    USAGE = 2


class CommandResult(BaseModel):
    """What a command prints and how it exits."""

    exit_code: ExitCode = Field(default=ExitCode.OK, description="Process exit status")
    report: str = Field(default="", description="Human-readable report for stdout")
    payload: dict[str, Any] | None = Field(
        default=None, description="Structured payload printed instead of the report with --json"
    )
    ok: bool = Field(default=True, description="True when every check passed")

    @model_validator(mode="after")
    def exit_code_matches(self) -> "CommandResult":
        if self.ok != (self.exit_code is ExitCode.OK):
            raise ValueError(f"exit code {int(self.exit_code)} disagrees with ok={self.ok}")
        return self

    @classmethod
    def from_check(
        cls, ok: bool, report: str, payload: dict[str, Any] | None = None  # noqa: FBT001
    ) -> "CommandResult":
        code = ExitCode.OK if ok else ExitCode.PROPERTY_FAILURE
        return cls(exit_code=code, report=report, payload=payload, ok=ok)
