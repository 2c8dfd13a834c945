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


class _ErrorStrMixin:
    """A mixin to provide a descriptive __str__ representation for exceptions."""

    def __str__(self) -> str:
        """Returns a string representation of the exception."""
        message = self.args[0] if self.args else ""
        # Prepend the class name to the message for clarity.
        return f"{self.__class__.__name__}: {message}"


class QuatSeqError(_ErrorStrMixin, Exception):
    """Base class for all quatseq errors."""


class InexactProductError(QuatSeqError, ArithmeticError):
    """Raised when a doubled-coordinate product is not divisible by two."""


class NotAUnitError(QuatSeqError, ValueError):
    """Raised when a value is not one of the 24 Hurwitz units."""


class AlphabetError(QuatSeqError, ValueError):
    """Raised when an entry lies outside the required alphabet."""


class NotSignedError(AlphabetError):
    """Raised when a sequence that must be a {±1}-sequence has other entries."""


class LengthMismatchError(QuatSeqError, ValueError):
    """Raised when sequences that must share a length do not."""


class ShiftRangeError(QuatSeqError, ValueError):
    """Raised when a shift lies outside the range an operation accepts."""


class DimensionError(QuatSeqError, ValueError):
    """Raised when a length or matrix shape violates an operation's requirement."""


class PreconditionError(QuatSeqError, ValueError):
    """Raised when a construction input fails one of its predicates."""

    def __init__(self, message: str, predicate: str) -> None:
        super().__init__(message)
        self.predicate = predicate


class SymmetryClassError(PreconditionError):
    """Raised when an input is not in the symmetry class an operation needs."""


class VerificationError(QuatSeqError, RuntimeError):
    """Raised when a construction's output fails its own re-check."""

    def __init__(self, message: str, construction: str, failed: list[str]) -> None:
        super().__init__(message)
        self.construction = construction
        self.failed = failed


class SearchBoundsError(QuatSeqError, ValueError):
    """Raised when a search is requested beyond its documented feasibility bound."""

    def __init__(self, message: str, limit: int) -> None:
        super().__init__(message)
        self.limit = limit


class SequenceParseError(QuatSeqError, ValueError):
    """Raised when sequence text cannot be parsed."""

    def __init__(self, message: str, position: int | None = None) -> None:
        super().__init__(message)
        self.position = position


class CatalogFormatError(QuatSeqError, ValueError):
    """Raised when a catalog line is malformed."""

    def __init__(self, message: str, line_number: int) -> None:
        super().__init__(message)
        self.line_number = line_number

    def __str__(self) -> str:
        return f"line {self.line_number}: {super().__str__()}"
