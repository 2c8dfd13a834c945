# Copyright 2025 Google LLC.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Models for catalog files and their verification reports.
"""

from pydantic import BaseModel, Field

from .enums import AlphabetName


class CatalogEntry(BaseModel):
    """One `name length properties sequence` line of a catalog file."""

    name: str = Field(description="Entry name, e.g. P_34")
    length: int = Field(ge=1, description="Declared length")
    sequence: str = Field(description="The sequence in compact text, whitespace removed")
    palindromic: bool = Field(default=False, description="Declared palindromic")
    odd_perfect: bool = Field(default=False, description="Declared odd perfect")
    perfect: bool = Field(default=False, description="Declared perfect")
    alphabet: AlphabetName = Field(
        default=AlphabetName.HURWITZ, description="Declared entry alphabet"
    )
    line_number: int | None = Field(
        default=None, description="Line the entry was read from, if any"
    )


class EntryVerification(BaseModel):
    """Outcome of checking one catalog entry against its declarations."""

    name: str = Field(description="The entry name, or the line label for parse failures")
    line_number: int | None = Field(default=None, description="Source line, if known")
    passed: bool = Field(description="True when every declared property holds")
    failures: list[str] = Field(
        default_factory=list, description="Human-readable reasons for failure"
    )
    first_nonzero_shift: int | None = Field(
        default=None,
        description="First shift with a nonzero odd (or periodic) autocorrelation",
    )


class CatalogReport(BaseModel):
    """Per-entry results for a whole catalog file."""

    source: str = Field(description="Where the catalog was read from")
    entries: list[EntryVerification] = Field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.entries)

    @property
    def failed(self) -> int:
        return sum(1 for e in self.entries if not e.passed)

    @property
    def passed(self) -> bool:
        return self.failed == 0
