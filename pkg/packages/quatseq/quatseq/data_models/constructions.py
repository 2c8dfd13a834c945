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
Models describing construction provenance.
"""

from pydantic import BaseModel, Field


class ConstructionReceipt(BaseModel):
    """Record of one construction step and the checks run on its output."""

    name: str = Field(description="The construction that was applied")
    inputs: dict[str, str] = Field(
        default_factory=dict, description="Input descriptors in compact text"
    )
    outputs: list[str] = Field(
        default_factory=list, description="Output sequences in compact text"
    )
    checks: dict[str, bool] = Field(
        default_factory=dict, description="Postcondition predicates and their outcomes"
    )
    advisories: dict[str, bool] = Field(
        default_factory=dict,
        description="Properties observed on the output that the construction does not promise",
    )

    @property
    def verified(self) -> bool:
        return all(self.checks.values())


class NonexistenceCertificate(BaseModel):
    """Evidence that no antipalindromic nega-Williamson quad exists at an odd length."""

    length: int = Field(description="The odd length examined")
    rowsum_values: list[int] = Field(
        description="Row sums attainable by alternately negated antipalindromic sequences"
    )
    max_rowsum_square_total: int = Field(
        description="Largest possible sum of four squared row sums"
    )
    required_rowsum_square_total: int = Field(
        description="Sum of squared row sums every periodic complementary quad has (4n)"
    )
    exhaustive_count: int | None = Field(
        default=None,
        description="Antipalindromic nega-Williamson quads found by exhaustive search, if run",
    )

    @property
    def exists(self) -> bool:
        if self.exhaustive_count is not None:
            return self.exhaustive_count > 0
        return self.max_rowsum_square_total >= self.required_rowsum_square_total
