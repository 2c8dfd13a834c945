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
Aperiodic, periodic and negaperiodic correlations and the predicates built on them.

Every correlation keeps the factor order a_r · conj(b_{r+t}). Values are summed
exactly in doubled int64 coordinates: a correlation is a sum of unit products,
so it lies in the doubled lattice and the final halving is exact.
"""

import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .data_models.enums import CorrelationKind
from .exceptions import (
    DimensionError,
    InexactProductError,
    LengthMismatchError,
    ShiftRangeError,
)
from .quaternion import HurwitzUnit, QuatValue, as_unit
from .sequences import QSeq, require_same_length

_CONJ_SIGNS = np.array([1, -1, -1, -1], dtype=np.int64)


def _hamilton_tensor() -> np.ndarray:
    # Component c of p*q is sum over (a, b) of T[c, a, b] * p_a * q_b.
    tensor = np.zeros((4, 4, 4), dtype=np.int64)
    terms = {
        0: ((0, 0, 1), (1, 1, -1), (2, 2, -1), (3, 3, -1)),
        1: ((0, 1, 1), (1, 0, 1), (2, 3, 1), (3, 2, -1)),
        2: ((0, 2, 1), (1, 3, -1), (2, 0, 1), (3, 1, 1)),
        3: ((0, 3, 1), (1, 2, 1), (2, 1, -1), (3, 0, 1)),
    }
    for component, entries in terms.items():
        for a, b, sign in entries:
            tensor[component, a, b] = sign
    return tensor


_HAMILTON = _hamilton_tensor()


def _product_sum(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Doubled coordinates of sum_r p_r * q_r, for doubled (k, 4) row arrays."""
    if p.shape[0] == 0:
        return np.zeros(4, dtype=np.int64)
    gram = p.T @ q
    raw = np.einsum("cab,ab->c", _HAMILTON, gram)
    if np.any(raw & 1):
        raise InexactProductError("correlation sum left the doubled lattice")
    return raw // 2


def _to_value(doubled: np.ndarray) -> QuatValue:
    return QuatValue(*(int(c) for c in doubled))


def _conj_coords(x: QSeq) -> np.ndarray:
    return x.coords * _CONJ_SIGNS


def _pair(a: QSeq, b: QSeq | None) -> tuple[QSeq, QSeq]:
    if b is None:
        return a, a
    require_same_length(a, b)
    return a, b


def _periodic_doubled(a: QSeq, b: QSeq, t: int, *, nega: bool) -> np.ndarray:
    n = len(a)
    shifted = np.roll(_conj_coords(b), -(t % n), axis=0)
    if nega:
        wraps = np.floor_divide(np.arange(n) + t, n) & 1
        shifted = shifted * (1 - 2 * wraps)[:, None]
    return _product_sum(a.coords, shifted)


def _aperiodic_doubled(a: QSeq, b: QSeq, t: int) -> np.ndarray:
    n = len(a)
    if not 0 <= t <= n:
        raise ShiftRangeError(f"aperiodic shift {t} outside [0, {n}]")
    return _product_sum(a.coords[: n - t], _conj_coords(b)[t:])


def aperiodic_cross(a: QSeq, b: QSeq, t: int) -> QuatValue:
    """C_{A,B}(t) = sum_{r=0}^{n-t-1} a_r conj(b_{r+t}) for 0 <= t <= n."""
    a, b = _pair(a, b)
    return _to_value(_aperiodic_doubled(a, b, t))


def periodic_cross(a: QSeq, b: QSeq, t: int) -> QuatValue:
    """R_{A,B}(t) = sum_r a_r conj(b_{(r+t) mod n}) for any integer t."""
    a, b = _pair(a, b)
    return _to_value(_periodic_doubled(a, b, t, nega=False))


def negaperiodic_cross(a: QSeq, b: QSeq, t: int) -> QuatValue:
    """R̂_{A,B}(t) = sum_r (-1)^floor((r+t)/n) a_r conj(b_{(r+t) mod n}) for any integer t."""
    a, b = _pair(a, b)
    return _to_value(_periodic_doubled(a, b, t, nega=True))


def periodic_cross_split(a: QSeq, b: QSeq, t: int) -> QuatValue:
    """The two-term form C_{A,B}(t) + conj(C_{B,A}(n-t)), for 0 <= t < n."""
    a, b = _pair(a, b)
    n = len(a)
    if not 0 <= t < n:
        raise ShiftRangeError(f"shift {t} outside [0, {n})")
    return aperiodic_cross(a, b, t) + aperiodic_cross(b, a, n - t).conjugate()


def negaperiodic_cross_split(a: QSeq, b: QSeq, t: int) -> QuatValue:
    """The two-term form C_{A,B}(t) - conj(C_{B,A}(n-t)), for 0 <= t < n."""
    a, b = _pair(a, b)
    n = len(a)
    if not 0 <= t < n:
        raise ShiftRangeError(f"shift {t} outside [0, {n})")
    return aperiodic_cross(a, b, t) - aperiodic_cross(b, a, n - t).conjugate()


def _profile_doubled(a: QSeq, b: QSeq, kind: CorrelationKind) -> np.ndarray:
    n = len(a)
    if kind is CorrelationKind.APERIODIC:
        rows = [_aperiodic_doubled(a, b, t) for t in range(n)]
    else:
        nega = kind is CorrelationKind.NEGAPERIODIC
        rows = [_periodic_doubled(a, b, t, nega=nega) for t in range(n)]
    return np.stack(rows)


@dataclass(frozen=True)
class CorrelationProfile:
    """Correlation values indexed by shift t in [0, n)."""

    values: tuple[QuatValue, ...]
    kind: CorrelationKind

    def first_nonzero(self, start: int = 1) -> tuple[int, QuatValue] | None:
        for t in range(start, len(self.values)):
            if not self.values[t].is_zero:
                return t, self.values[t]
        return None

    @cached_property
    def vanishes(self) -> bool:
        """True when every nontrivial shift is zero."""
        return self.first_nonzero() is None


def _as_profile(doubled: np.ndarray, kind: CorrelationKind) -> CorrelationProfile:
    return CorrelationProfile(tuple(_to_value(row) for row in doubled), kind)


def correlation_profile(
    a: QSeq, b: QSeq | None = None, kind: CorrelationKind = CorrelationKind.PERIODIC
) -> CorrelationProfile:
    """Computes the (cross)correlation of `a` with `b` (default: itself) at every shift."""
    a, b = _pair(a, b)
    return _as_profile(_profile_doubled(a, b, kind), kind)


def summed_profile(
    seqs: Sequence[QSeq], kind: CorrelationKind
) -> CorrelationProfile:
    """Sum of the autocorrelation profiles of a set of sequences."""
    if not seqs:
        raise DimensionError("a complementary set needs at least one sequence")
    require_same_length(*seqs)
    total = sum(_profile_doubled(s, s, kind) for s in seqs)
    return _as_profile(total, kind)


def perfection_violation(
    a: QSeq, kind: CorrelationKind = CorrelationKind.PERIODIC
) -> tuple[int, QuatValue] | None:
    """The first nontrivial shift with a nonzero autocorrelation, if any."""
    return correlation_profile(a, kind=kind).first_nonzero()


def is_perfect(a: QSeq) -> bool:
    return perfection_violation(a, CorrelationKind.PERIODIC) is None


def is_odd_perfect(a: QSeq) -> bool:
    return perfection_violation(a, CorrelationKind.NEGAPERIODIC) is None


def complementarity_violation(
    seqs: Sequence[QSeq], mode: CorrelationKind
) -> tuple[int, QuatValue] | None:
    return summed_profile(seqs, mode).first_nonzero()


def is_complementary_set(seqs: Sequence[QSeq], mode: CorrelationKind) -> bool:
    return complementarity_violation(seqs, mode) is None


def cross_violation(
    seqs: Sequence[QSeq], kind: CorrelationKind = CorrelationKind.PERIODIC
) -> tuple[int, int, int, QuatValue] | None:
    """First (i, j, t, value) with a nonzero cross-correlation of members i < j."""
    if seqs:
        require_same_length(*seqs)
    for i, j in itertools.combinations(range(len(seqs)), 2):
        hit = correlation_profile(seqs[i], seqs[j], kind).first_nonzero(start=0)
        if hit is not None:
            return i, j, hit[0], hit[1]
    return None


def is_periodically_uncorrelated(seqs: Sequence[QSeq]) -> bool:
    """True when R_{X,Y}(t) = 0 for all t and all distinct members X, Y."""
    return cross_violation(seqs) is None


def _amicable(x: QSeq, y: QSeq, kind: CorrelationKind) -> bool:
    require_same_length(x, y)
    return bool(np.array_equal(_profile_doubled(x, y, kind), _profile_doubled(y, x, kind)))


def is_amicable(x: QSeq, y: QSeq) -> bool:
    """True when R_{X,Y}(t) = R_{Y,X}(t) for every t."""
    return _amicable(x, y, CorrelationKind.PERIODIC)


def is_nega_amicable(x: QSeq, y: QSeq) -> bool:
    """True when R̂_{X,Y}(t) = R̂_{Y,X}(t) for every t."""
    return _amicable(x, y, CorrelationKind.NEGAPERIODIC)


@dataclass(frozen=True)
class QMatrix:
    """An n×m grid of Hurwitz units, stored row by row."""

    rows: tuple[tuple[HurwitzUnit, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows or not self.rows[0]:
            raise DimensionError("a matrix needs at least one row and one column")
        widths = {len(row) for row in self.rows}
        if len(widths) != 1:
            raise LengthMismatchError(f"matrix rows have differing widths: {sorted(widths)}")
        object.__setattr__(
            self, "rows", tuple(tuple(as_unit(e) for e in row) for row in self.rows)
        )

    @classmethod
    def from_rows(cls, rows: Sequence[QSeq]) -> "QMatrix":
        return cls(tuple(row.entries for row in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[QSeq]) -> "QMatrix":
        require_same_length(*columns)
        return cls(tuple(zip(*(c.entries for c in columns), strict=True)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def row_sequences(self) -> list[QSeq]:
        return [QSeq(row) for row in self.rows]

    def columns(self) -> list[QSeq]:
        return [QSeq(col) for col in zip(*self.rows, strict=True)]

    def transpose(self) -> "QMatrix":
        return QMatrix(tuple(zip(*self.rows, strict=True)))

    @cached_property
    def coords(self) -> np.ndarray:
        arr = np.stack([row.coords for row in self.row_sequences()])
        arr.flags.writeable = False
        return arr


def array_orthogonality_violation(m: QMatrix) -> str | None:
    """Describes the first failure of array orthogonality, or None."""
    rows, cols = m.shape
    if rows % cols:
        raise DimensionError(f"column length {rows} is not a multiple of the column count {cols}")
    columns = m.columns()
    hit = complementarity_violation(columns, CorrelationKind.PERIODIC)
    if hit is not None:
        return f"columns not periodic complementary at t={hit[0]} (sum {hit[1]})"
    cross = cross_violation(columns)
    if cross is not None:
        i, j, t, value = cross
        return f"columns {i} and {j} correlated at t={t} (value {value})"
    return None


def has_array_orthogonality(m: QMatrix) -> bool:
    """Columns periodic complementary and pairwise periodically uncorrelated."""
    return array_orthogonality_violation(m) is None


def perfect_array_violation(m: QMatrix) -> tuple[int, int, QuatValue] | None:
    """The first 2D shift (t, t') != (0, 0) with a nonzero autocorrelation.

    Row shifts wrap modulo the row count and column shifts modulo the column count.
    """
    rows, cols = m.shape
    flat = m.coords.reshape(rows * cols, 4)
    conj = m.coords * _CONJ_SIGNS
    for t, t2 in itertools.product(range(rows), range(cols)):
        if t == 0 and t2 == 0:
            continue
        shifted = np.roll(conj, (-t, -t2), axis=(0, 1)).reshape(rows * cols, 4)
        value = _product_sum(flat, shifted)
        if np.any(value):
            return t, t2, _to_value(value)
    return None


def is_perfect_array(m: QMatrix) -> bool:
    return perfect_array_violation(m) is None
