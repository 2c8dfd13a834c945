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
Enums for data modeling.
Contains the named choices shared by the library, the search oracle and the CLI.
"""

from enum import Enum


class CorrelationKind(str, Enum):
    """Which correlation a profile or complementarity test uses."""

    APERIODIC = "aperiodic"
    PERIODIC = "periodic"
    NEGAPERIODIC = "negaperiodic"


class SymmetryRequirement(str, Enum):
    """Uniform symmetry class required of every member of a design."""

    NONE = "none"
    SYMMETRIC = "symmetric"
    PALINDROMIC = "palindromic"
    ANTIPALINDROMIC = "antipalindromic"


class AlphabetName(str, Enum):
    """Entry alphabets, ordered by inclusion."""

    SIGNS = "signs"
    Q8 = "q8"
    QPLUS = "qplus"
    HURWITZ = "hurwitz"


class DesignKind(str, Enum):
    """Object kinds the search oracle enumerates."""

    PERFECT = "perfect"
    ODD_PERFECT = "odd-perfect"
    WILLIAMSON = "williamson"
    WILLIAMSON_TYPE = "williamson-type"
    NEGA_WILLIAMSON = "nega-williamson"
    PAL_NEGA_WILLIAMSON = "pal-nega-williamson"
    ANTIPAL_NEGA_WILLIAMSON = "antipal-nega-williamson"
    GOLAY = "golay"

    @property
    def is_quad(self) -> bool:
        return self not in (DesignKind.PERFECT, DesignKind.ODD_PERFECT, DesignKind.GOLAY)


class NegaConSet(str, Enum):
    """The two Golay-derived nega-Williamson families."""

    SET1 = "1"
    SET2 = "2"


class ConversionDirection(str, Enum):
    """Direction of the symmetry-class conversions between designs."""

    FORWARD = "forward"
    INVERSE = "inverse"


class ProductMode(str, Enum):
    """Which product of two sequences to form."""

    PERIODIC = "periodic"
    ODD = "odd"


class VerifyProperty(str, Enum):
    """Properties the `verify` command can check."""

    PERFECT = "perfect"
    ODD_PERFECT = "odd-perfect"
    GOLAY = "golay"
    WILLIAMSON = "williamson"
    NEGA_WILLIAMSON = "nega-williamson"
    Q8_PROPERTY = "q8-property"
    ARRAY_ORTHOGONALITY = "array-orthogonality"
    PERFECT_ARRAY = "perfect-array"
