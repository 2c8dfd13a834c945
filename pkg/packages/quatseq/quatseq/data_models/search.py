"""
Data models for the search oracle.

This module defines the request (`SearchSpec`) and the report (`SearchResult`)
exchanged between the enumeration engine, the CLI and JSON output.
"""

from pydantic import BaseModel, Field, model_validator

from .enums import AlphabetName, DesignKind, SymmetryRequirement

# Symmetry each quad kind imposes on its members; other kinds take it from the spec.
KIND_SYMMETRY: dict[DesignKind, SymmetryRequirement] = {
    DesignKind.WILLIAMSON: SymmetryRequirement.SYMMETRIC,
    DesignKind.PAL_NEGA_WILLIAMSON: SymmetryRequirement.PALINDROMIC,
    DesignKind.ANTIPAL_NEGA_WILLIAMSON: SymmetryRequirement.ANTIPALINDROMIC,
}


class SearchSpec(BaseModel):
    """What to enumerate."""

    kind: DesignKind = Field(description="The design kind to enumerate")
    length: int = Field(ge=1, description="Sequence length n")
    alphabet: AlphabetName = Field(
        default=AlphabetName.SIGNS,
        description="Entry alphabet for perfect and odd-perfect searches",
    )
    symmetry: SymmetryRequirement = Field(
        default=SymmetryRequirement.NONE,
        description="Symmetry class required of every sequence (quad kinds may fix it)",
    )
    q8_property: bool = Field(
        default=False, description="Require a_r b_r c_r d_r = 1 at every position"
    )
    cap: int | None = Field(
        default=None,
        ge=1,
        description="Maximum number of listed results; None uses the configured cap",
    )

    @model_validator(mode="after")
    def check_combination(self) -> "SearchSpec":
        if self.q8_property and not self.kind.is_quad:
            raise ValueError(f"the Q8-property applies to quads, not {self.kind.value}")
        sequence_kind = self.kind in (DesignKind.PERFECT, DesignKind.ODD_PERFECT)
        if not sequence_kind and self.alphabet is not AlphabetName.SIGNS:
            raise ValueError(f"{self.kind.value} searches are over the signs alphabet only")
        fixed = KIND_SYMMETRY.get(self.kind)
        if fixed is not None and self.symmetry not in (SymmetryRequirement.NONE, fixed):
            raise ValueError(f"{self.kind.value} members are always {fixed.value}")
        return self

    @property
    def effective_symmetry(self) -> SymmetryRequirement:
        return KIND_SYMMETRY.get(self.kind, self.symmetry)


class SearchResult(BaseModel):
    """An exhaustive enumeration: the exact count and the leading results."""

    spec: SearchSpec = Field(description="The enumerated search space")
    count: int = Field(ge=0, description="Exact number of objects found")
    results: list[str] = Field(
        default_factory=list,
        description="Objects in lexicographic order, compact text, at most `cap` of them",
    )
    truncated: bool = Field(
        default=False, description="True when the listing stops before `count`"
    )
