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
Quaternion sequences and their structural operations.

`QSeq` is the universal sequence type (entries are Hurwitz units); `Quad` is an
ordered quadruple of equal-length {±1}-sequences. All operations return new
values.
"""

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import NamedTuple, overload

import numpy as np

from .exceptions import DimensionError, LengthMismatchError, NotSignedError
from .quaternion import (
    ONE,
    UNIT_COORDS,
    UNITS,
    ZERO,
    HurwitzUnit,
    QuatValue,
    as_unit,
    quat_mul,
    unit_index,
)

_MINUS_ONE = -ONE
_SIGNS = frozenset((ONE, _MINUS_ONE))


@dataclass(frozen=True)
class QSeq:
    """A finite, immutable sequence of Hurwitz units."""

    entries: tuple[HurwitzUnit, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise DimensionError("a sequence needs at least one entry")
        object.__setattr__(self, "entries", tuple(as_unit(e) for e in self.entries))

    @classmethod
    def of(cls, entries: Iterable[QuatValue]) -> "QSeq":
        return cls(tuple(entries))

    @classmethod
    def from_signs(cls, signs: Iterable[int]) -> "QSeq":
        """Builds a {±1}-sequence from integers 1 and -1."""
        entries = []
        for s in signs:
            if s not in (1, -1):
                raise NotSignedError(f"expected +1 or -1, got {s!r}")
            entries.append(ONE if s == 1 else _MINUS_ONE)
        return cls(tuple(entries))

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "QSeq":
        """Builds a sequence from canonical unit indices."""
        return cls(tuple(UNITS[int(i)] for i in indices))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[HurwitzUnit]:
        return iter(self.entries)

    @overload
    def __getitem__(self, index: int) -> HurwitzUnit: ...

    @overload
    def __getitem__(self, index: slice) -> "QSeq": ...

    def __getitem__(self, index: int | slice) -> "HurwitzUnit | QSeq":
        if isinstance(index, slice):
            return QSeq(self.entries[index])
        return self.entries[index]

    def __neg__(self) -> "QSeq":
        return negate(self)

    def __str__(self) -> str:
        from .catalog_io import format_sequence_any

        return format_sequence_any(self)

    @cached_property
    def indices(self) -> np.ndarray:
        """Canonical unit indices, read-only."""
        arr = np.fromiter((unit_index(e) for e in self.entries), dtype=np.int8)
        arr.flags.writeable = False
        return arr

    @cached_property
    def coords(self) -> np.ndarray:
        """Doubled coordinates as an (n, 4) int64 array, read-only."""
        arr = UNIT_COORDS[self.indices]
        arr.flags.writeable = False
        return arr

    @property
    def is_signed(self) -> bool:
        return all(e in _SIGNS for e in self.entries)

    def signs(self) -> np.ndarray:
        """The entries as an int8 array of ±1; only for {±1}-sequences."""
        require_signed(self)
        return np.array([1 if e == ONE else -1 for e in self.entries], dtype=np.int8)


def require_signed(*seqs: QSeq) -> None:
    for seq in seqs:
        if not seq.is_signed:
            raise NotSignedError(f"{seq} is not a {{±1}}-sequence")


def require_same_length(*seqs: QSeq) -> int:
    lengths = {len(s) for s in seqs}
    if len(lengths) != 1:
        raise LengthMismatchError(f"sequence lengths differ: {sorted(lengths)}")
    return lengths.pop()


@dataclass(frozen=True)
class Quad:
    """An ordered quadruple (A, B, C, D) of equal-length {±1}-sequences."""

    a: QSeq
    b: QSeq
    c: QSeq
    d: QSeq

    def __post_init__(self) -> None:
        require_same_length(*self.members)
        require_signed(*self.members)

    @classmethod
    def of(cls, members: Iterable[QSeq]) -> "Quad":
        seqs = tuple(members)
        if len(seqs) != 4:
            raise DimensionError(f"a quad has four members, got {len(seqs)}")
        return cls(*seqs)

    @classmethod
    def uniform(cls, seq: QSeq) -> "Quad":
        return cls(seq, seq, seq, seq)

    @property
    def members(self) -> tuple[QSeq, QSeq, QSeq, QSeq]:
        return (self.a, self.b, self.c, self.d)

    @property
    def length(self) -> int:
        return len(self.a)

    def __iter__(self) -> Iterator[QSeq]:
        return iter(self.members)

    def map(self, fn: Callable[[QSeq], QSeq]) -> "Quad":
        return Quad(*(fn(m) for m in self.members))

    def __str__(self) -> str:
        return ",".join(str(m) for m in self.members)


class SymmetryClass(NamedTuple):
    symmetric: bool
    palindromic: bool
    antipalindromic: bool
    antisymmetric: bool


def cyclic_shift(x: QSeq, count: int = 1) -> QSeq:
    """Applies `count` cyclic shifts; one shift moves the last entry to the front."""
    n = len(x)
    k = count % n
    if k == 0:
        return x
    return QSeq(x.entries[n - k :] + x.entries[: n - k])


def negacyclic_shift(x: QSeq, count: int = 1) -> QSeq:
    """Applies `count` negacyclic shifts; one shift moves the negated last entry to the front.

    Negative counts apply the inverse shift.
    """
    n = len(x)
    k = count % (2 * n)
    if k == 0:
        return x
    entries = x.entries
    if k >= n:
        entries = tuple(-e for e in entries)
        k -= n
    if k == 0:
        return QSeq(entries)
    wrapped = tuple(-e for e in entries[n - k :])
    return QSeq(wrapped + entries[: n - k])


def alternate_negate(x: QSeq) -> QSeq:
    return QSeq(tuple(e if r % 2 == 0 else -e for r, e in enumerate(x.entries)))


def negate(x: QSeq) -> QSeq:
    return QSeq(tuple(-e for e in x.entries))


def doub(x: QSeq) -> QSeq:
    return QSeq(x.entries + x.entries)


def negadoub(x: QSeq) -> QSeq:
    return QSeq(x.entries + negate(x).entries)


def interleave(x: QSeq, y: QSeq) -> QSeq:
    require_same_length(x, y)
    return QSeq(tuple(e for pair in zip(x.entries, y.entries, strict=True) for e in pair))


def deinterleave(x: QSeq) -> tuple[QSeq, QSeq]:
    """Splits into the even-index and odd-index subsequences."""
    if len(x) % 2:
        raise DimensionError(f"deinterleave needs an even length, got {len(x)}")
    return QSeq(x.entries[0::2]), QSeq(x.entries[1::2])


def reverse(x: QSeq) -> QSeq:
    return QSeq(x.entries[::-1])


def concat(*seqs: QSeq) -> QSeq:
    if not seqs:
        raise DimensionError("concat needs at least one sequence")
    return QSeq(tuple(e for s in seqs for e in s.entries))


def scalar_premul(u: HurwitzUnit, x: QSeq) -> QSeq:
    """Multiplies every entry on the left by `u`."""
    return QSeq(tuple(quat_mul(u, e) for e in x.entries))


def rowsum(x: QSeq) -> QuatValue:
    return reduce(QuatValue.__add__, x.entries, ZERO)


def classify_symmetry(x: QSeq) -> SymmetryClass:
    e = x.entries
    n = len(e)
    return SymmetryClass(
        symmetric=all(e[t] == e[n - t] for t in range(1, n)),
        palindromic=all(e[t] == e[n - t - 1] for t in range(n)),
        antipalindromic=all(e[t] == -e[n - t - 1] for t in range(n) if 2 * t < n - 1),
        antisymmetric=all(e[t] == -e[n - t] for t in range(1, n) if 2 * t < n),
    )
