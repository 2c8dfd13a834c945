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
Exact quaternion arithmetic in doubled integer coordinates.

A `QuatValue` stores (2w, 2x, 2y, 2z) for the quaternion w + xi + yj + zk, so
every Hurwitz quaternion (all coordinates integers, or all half-odd-integers)
has integer storage. Sequence entries are the 24 Hurwitz units; correlation
values are sums of products of units and therefore Hurwitz quaternions too.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import NamedTuple, TypeAlias

import numpy as np

from .exceptions import InexactProductError, NotAUnitError

logger = logging.getLogger(__name__)


def _hamilton(
    p: tuple[int, int, int, int], q: tuple[int, int, int, int]
) -> tuple[int, int, int, int]:
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


@dataclass(frozen=True, slots=True)
class QuatValue:
    """An exact quaternion with half-integer coordinates, stored doubled."""

    w2: int
    x2: int
    y2: int
    z2: int

    @classmethod
    def integer(cls, w: int = 0, x: int = 0, y: int = 0, z: int = 0) -> "QuatValue":
        """Builds the quaternion w + xi + yj + zk from integer coordinates."""
        return cls(2 * w, 2 * x, 2 * y, 2 * z)

    @property
    def doubled(self) -> tuple[int, int, int, int]:
        return (self.w2, self.x2, self.y2, self.z2)

    @property
    def norm4(self) -> int:
        """Four times the norm: the sum of squares of the doubled coordinates."""
        return self.w2**2 + self.x2**2 + self.y2**2 + self.z2**2

    @property
    def is_zero(self) -> bool:
        return not (self.w2 or self.x2 or self.y2 or self.z2)

    @property
    def is_hurwitz(self) -> bool:
        parities = {c & 1 for c in self.doubled}
        return len(parities) == 1

    @property
    def is_unit(self) -> bool:
        return self.norm4 == 4 and self.is_hurwitz

    @property
    def is_real(self) -> bool:
        return not (self.x2 or self.y2 or self.z2)

    def __add__(self, other: "QuatValue") -> "QuatValue":
        return QuatValue(
            self.w2 + other.w2,
            self.x2 + other.x2,
            self.y2 + other.y2,
            self.z2 + other.z2,
        )

    def __sub__(self, other: "QuatValue") -> "QuatValue":
        return self + (-other)

    def __neg__(self) -> "QuatValue":
        return QuatValue(-self.w2, -self.x2, -self.y2, -self.z2)

    def __mul__(self, other: "QuatValue") -> "QuatValue":
        return quat_mul(self, other)

    def scale(self, factor: int) -> "QuatValue":
        return QuatValue(
            factor * self.w2, factor * self.x2, factor * self.y2, factor * self.z2
        )

    def conjugate(self) -> "QuatValue":
        return quat_conj(self)

    def __str__(self) -> str:
        if all(c % 2 == 0 for c in self.doubled):
            return _format_terms(tuple(c // 2 for c in self.doubled)) or "0"
        return f"({_format_terms(self.doubled)})/2"


def _format_terms(coords: tuple[int, ...]) -> str:
    text = ""
    for coord, basis in zip(coords, ("", "i", "j", "k"), strict=True):
        if coord == 0:
            continue
        magnitude = "" if abs(coord) == 1 and basis else str(abs(coord))
        sign = "-" if coord < 0 else ("+" if text else "")
        text += f"{sign}{magnitude}{basis}"
    return text


HurwitzUnit: TypeAlias = QuatValue
"""A `QuatValue` of norm 1 with Hurwitz coordinates; one of `UNITS`."""

ZERO = QuatValue(0, 0, 0, 0)


def quat_mul(p: QuatValue, q: QuatValue) -> QuatValue:
    """Returns the Hamilton product p·q.

    In doubled coordinates doubled(p·q) = (doubled(p) ⊛ doubled(q)) / 2, which
    is exact whenever both factors are Hurwitz quaternions.
    """
    product = _hamilton(p.doubled, q.doubled)
    if any(c & 1 for c in product):
        raise InexactProductError(f"product of {p} and {q} leaves the doubled lattice")
    return QuatValue(*(c // 2 for c in product))


def quat_conj(p: QuatValue) -> QuatValue:
    return QuatValue(p.w2, -p.x2, -p.y2, -p.z2)


ONE = QuatValue.integer(1)
I = QuatValue.integer(x=1)  # noqa: E741
J = QuatValue.integer(y=1)
K = QuatValue.integer(z=1)
Q = QuatValue(1, 1, 1, 1)
"""q = (1 + i + j + k)/2."""


def _canonical_units() -> tuple[QuatValue, ...]:
    axis = []
    for basis in (ONE, I, J, K):
        axis.extend((basis, -basis))
    # Sign-lexicographic: + before -, first coordinate most significant.
    half = [
        QuatValue(*(-1 if neg else 1 for neg in signs))
        for signs in itertools.product((False, True), repeat=4)
    ]
    return tuple(axis + half)


UNITS: tuple[HurwitzUnit, ...] = _canonical_units()
"""The 24 Hurwitz units in canonical order: 1, -1, i, -i, j, -j, k, -k, then
the 16 half-coordinate units in sign-lexicographic order."""

_UNIT_INDEX: dict[QuatValue, int] = {u: idx for idx, u in enumerate(UNITS)}


def unit_index(u: QuatValue) -> int:
    """Returns the canonical index of a Hurwitz unit."""
    try:
        return _UNIT_INDEX[u]
    except KeyError:
        raise NotAUnitError(f"{u} is not a Hurwitz unit") from None


def as_unit(value: QuatValue) -> HurwitzUnit:
    """Validates that `value` is one of the 24 units and returns the interned copy."""
    return UNITS[unit_index(value)]


def _build_tables() -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    size = len(UNITS)
    mul = np.empty((size, size), dtype=np.int8)
    mul_conj = np.empty((size, size), dtype=np.int8)
    for a, u in enumerate(UNITS):
        for b, v in enumerate(UNITS):
            product = quat_mul(u, v)
            if not product.is_unit:
                raise NotAUnitError(f"unit table not closed: {u} * {v} = {product}")
            mul[a, b] = _UNIT_INDEX[product]
            mul_conj[a, b] = _UNIT_INDEX[quat_mul(u, quat_conj(v))]
    conj = np.array([_UNIT_INDEX[quat_conj(u)] for u in UNITS], dtype=np.int8)
    coords = np.array([u.doubled for u in UNITS], dtype=np.int64)
    return mul, mul_conj, conj, coords


MUL_TABLE, MUL_CONJ_TABLE, CONJ_TABLE, UNIT_COORDS = _build_tables()
"""Lookup tables over canonical unit indices: products, products with the
conjugate of the right factor, conjugates, and doubled coordinates."""

Q8: frozenset[HurwitzUnit] = frozenset(UNITS[:8])
QQ8: frozenset[HurwitzUnit] = frozenset(quat_mul(Q, u) for u in Q8)
QPLUS: frozenset[HurwitzUnit] = Q8 | QQ8


class AlphabetMembership(NamedTuple):
    in_q8: bool
    in_qplus: bool
    in_qq8: bool


def alphabet_membership(u: HurwitzUnit) -> AlphabetMembership:
    """Classifies a unit against Q8, Q+ and qQ8."""
    unit = as_unit(u)
    return AlphabetMembership(
        in_q8=unit in Q8, in_qplus=unit in QPLUS, in_qq8=unit in QQ8
    )


logger.debug(
    "Built %dx%d unit tables; |Q8|=%d |Q+|=%d", len(UNITS), len(UNITS), len(Q8), len(QPLUS)
)
