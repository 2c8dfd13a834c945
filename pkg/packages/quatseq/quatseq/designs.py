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
Design predicates (Golay pairs, Williamson and nega-Williamson quads, the
Q8-property, Williamson-type amicability) and the entrywise correspondence
between {±1} quads and sequences over Q+.
"""

import itertools
import logging
from typing import NamedTuple

from .correlation import (
    complementarity_violation,
    is_amicable,
)
from .data_models.enums import AlphabetName, CorrelationKind, SymmetryRequirement
from .exceptions import AlphabetError
from .quaternion import I, J, K, ONE, Q, Q8, QPLUS, HurwitzUnit, QuatValue, quat_mul
from .sequences import QSeq, Quad, classify_symmetry, require_same_length, require_signed

logger = logging.getLogger(__name__)

SignPattern = tuple[int, int, int, int]

_TABLE_COLUMNS: tuple[tuple[SignPattern, HurwitzUnit], ...] = (
    ((-1, -1, -1, -1), ONE),
    ((1, -1, -1, 1), I),
    ((1, 1, -1, -1), J),
    ((1, -1, 1, -1), K),
    ((1, -1, -1, -1), Q),
    ((1, 1, -1, 1), quat_mul(Q, I)),
    ((1, 1, 1, -1), quat_mul(Q, J)),
    ((1, -1, 1, 1), quat_mul(Q, K)),
)


def _build_bad_table() -> dict[SignPattern, HurwitzUnit]:
    table: dict[SignPattern, HurwitzUnit] = {}
    for pattern, unit in _TABLE_COLUMNS:
        table[pattern] = unit
        table[tuple(-s for s in pattern)] = -unit  # type: ignore[index]
    return table


BAD_TABLE: dict[SignPattern, HurwitzUnit] = _build_bad_table()
"""Sign pattern (a_r, b_r, c_r, d_r) to the Q+ entry s_r, negation rule applied."""

_BAD_INVERSE: dict[HurwitzUnit, SignPattern] = {u: p for p, u in BAD_TABLE.items()}


def _sign_rows(quad: Quad) -> list[SignPattern]:
    columns = [m.signs() for m in quad.members]
    return [tuple(int(col[r]) for col in columns) for r in range(quad.length)]  # type: ignore[misc]


def in_alphabet(seq: QSeq, alphabet: AlphabetName) -> bool:
    match alphabet:
        case AlphabetName.SIGNS:
            return seq.is_signed
        case AlphabetName.Q8:
            return all(e in Q8 for e in seq)
        case AlphabetName.QPLUS:
            return all(e in QPLUS for e in seq)
        case _:
            return True


def smallest_alphabet(seq: QSeq) -> AlphabetName:
    for alphabet in AlphabetName:
        if in_alphabet(seq, alphabet):
            return alphabet
    return AlphabetName.HURWITZ


def golay_violation(a: QSeq, b: QSeq) -> tuple[int, QuatValue] | None:
    """The first shift where C_A(t) + C_B(t) is nonzero, after checking both are {±1}-sequences."""
    require_same_length(a, b)
    require_signed(a, b)
    return complementarity_violation([a, b], CorrelationKind.APERIODIC)


def is_golay_pair(a: QSeq, b: QSeq) -> bool:
    """True when C_A(t) + C_B(t) = 0 for all 1 <= t < n."""
    return golay_violation(a, b) is None


def has_q8_property(q: Quad) -> bool:
    """True when a_r b_r c_r d_r = 1 at every position."""
    return all(p == 1 for p in williamson_entry_products(q))


def williamson_entry_products(q: Quad) -> list[int]:
    """The pointwise products a_r b_r c_r d_r."""
    return [a * b * c * d for a, b, c, d in _sign_rows(q)]


def williamson_violation(q: Quad) -> str | None:
    """Why `q` is not a Williamson quad, or None."""
    for name, member in zip("ABCD", q.members, strict=True):
        if not classify_symmetry(member).symmetric:
            return f"{name} is not symmetric"
    hit = complementarity_violation(q.members, CorrelationKind.PERIODIC)
    if hit is not None:
        return f"not periodic complementary at t={hit[0]} (sum {hit[1]})"
    return None


def is_williamson(q: Quad) -> bool:
    return williamson_violation(q) is None


def nega_williamson_violation(
    q: Quad, require: SymmetryRequirement = SymmetryRequirement.NONE
) -> str | None:
    """Why `q` is not nega-Williamson with the required symmetry class, or None."""
    if require is not SymmetryRequirement.NONE:
        for name, member in zip("ABCD", q.members, strict=True):
            if not getattr(classify_symmetry(member), require.value):
                return f"{name} is not {require.value}"
    hit = complementarity_violation(q.members, CorrelationKind.NEGAPERIODIC)
    if hit is not None:
        return f"not negacomplementary at t={hit[0]} (sum {hit[1]})"
    return None


def is_nega_williamson(
    q: Quad, require: SymmetryRequirement = SymmetryRequirement.NONE
) -> bool:
    return nega_williamson_violation(q, require) is None


def is_williamson_type(q: Quad) -> bool:
    """Periodic complementary and pairwise amicable."""
    if complementarity_violation(q.members, CorrelationKind.PERIODIC) is not None:
        return False
    return all(is_amicable(x, y) for x, y in itertools.combinations(q.members, 2))


def bad_encode(q: Quad) -> QSeq:
    """Maps a {±1} quad entrywise to a sequence over Q+."""
    return QSeq(tuple(BAD_TABLE[row] for row in _sign_rows(q)))


class BadEncoding(NamedTuple):
    sequence: QSeq
    williamson_type: bool


def bad_encode_checked(q: Quad) -> BadEncoding:
    """Encodes `q` and reports whether it is Williamson-type (else the output need not be perfect)."""
    verified = is_williamson_type(q)
    if not verified:
        logger.warning("Encoding a quad that is not Williamson-type: %s", q)
    return BadEncoding(bad_encode(q), verified)


def bad_decode(s: QSeq) -> Quad:
    """Inverse of `bad_encode`; every entry must lie in Q+."""
    rows = []
    for r, entry in enumerate(s):
        try:
            rows.append(_BAD_INVERSE[entry])
        except KeyError:
            raise AlphabetError(f"entry {r} ({entry}) is outside Q+") from None
    return Quad.of(QSeq.from_signs(col) for col in zip(*rows, strict=True))
