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
Exhaustive enumeration of small designs.

Results come out in lexicographic order over the canonical unit ordering and
the count is always exact; only the listing is capped. Searches beyond the
feasibility bounds are refused with `SearchBoundsError`.
"""

import itertools
import logging
import math
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _bitpack
from .data_models.enums import AlphabetName, CorrelationKind, DesignKind
from .data_models.search import SearchResult, SearchSpec
from .exceptions import DimensionError, SearchBoundsError
from .quaternion import (
    MUL_CONJ_TABLE,
    MUL_TABLE,
    ONE,
    Q8,
    QPLUS,
    UNIT_COORDS,
    UNITS,
    unit_index,
)
from .sequences import QSeq, Quad
from .settings import get_settings

logger = logging.getLogger(__name__)

SearchObject = QSeq | Quad | tuple[QSeq, QSeq]

SEQUENCE_BOUNDS: dict[AlphabetName, int] = {
    AlphabetName.SIGNS: 20,
    AlphabetName.Q8: 8,
    AlphabetName.QPLUS: 5,
    AlphabetName.HURWITZ: 4,
}
QUAD_BOUNDS: dict[DesignKind, int] = {
    DesignKind.WILLIAMSON: 8,
    DesignKind.WILLIAMSON_TYPE: 6,
    DesignKind.NEGA_WILLIAMSON: 8,
    DesignKind.PAL_NEGA_WILLIAMSON: 8,
    DesignKind.ANTIPAL_NEGA_WILLIAMSON: 8,
}
GOLAY_BOUND = 16

# Rows enumerated per partition in quaternion-alphabet searches.
_CHUNK_ROWS = 1 << 15

_NEGATE = MUL_TABLE[unit_index(-ONE)].astype(np.intp)
_MUL_CONJ = MUL_CONJ_TABLE.astype(np.intp)

_NEGA_KINDS = frozenset(
    (
        DesignKind.ODD_PERFECT,
        DesignKind.NEGA_WILLIAMSON,
        DesignKind.PAL_NEGA_WILLIAMSON,
        DesignKind.ANTIPAL_NEGA_WILLIAMSON,
    )
)


def search_bound(kind: DesignKind, alphabet: AlphabetName = AlphabetName.SIGNS) -> int:
    """The largest length searched for a kind and alphabet."""
    if kind is DesignKind.GOLAY:
        return GOLAY_BOUND
    if kind.is_quad:
        return QUAD_BOUNDS[kind]
    return SEQUENCE_BOUNDS[alphabet]


def check_bounds(spec: SearchSpec) -> None:
    limit = search_bound(spec.kind, spec.alphabet)
    if spec.length > limit:
        raise SearchBoundsError(
            f"{spec.kind.value} search over {spec.alphabet.value} is limited to "
            f"length {limit}, got {spec.length}",
            limit,
        )


def alphabet_indices(alphabet: AlphabetName) -> np.ndarray:
    """Canonical indices of an alphabet's units, ascending."""
    match alphabet:
        case AlphabetName.SIGNS:
            units = {ONE, -ONE}
        case AlphabetName.Q8:
            units = Q8
        case AlphabetName.QPLUS:
            units = QPLUS
        case _:
            units = frozenset(UNITS)
    return np.array(sorted(unit_index(u) for u in units), dtype=np.intp)


def _correlation_kind(kind: DesignKind) -> CorrelationKind:
    return CorrelationKind.NEGAPERIODIC if kind in _NEGA_KINDS else CorrelationKind.PERIODIC


# Sequences over {±1}.


def _sign_sequence_batches(spec: SearchSpec) -> Iterator[np.ndarray]:
    n = spec.length
    kind = _correlation_kind(spec.kind)
    words = _bitpack.class_words(n, spec.effective_symmetry)
    logger.info("Filtering %d sign words of length %d", len(words), n)
    for t in range(1, n):
        words = words[_bitpack.auto(words, t, n, kind) == 0]
        if not len(words):
            break
    yield words[:, None]


# Sequences over quaternion alphabets.


def _filter_chunk(
    prefix: tuple[int, ...],
    suffixes: np.ndarray,
    alphabet: np.ndarray,
    layout: tuple[list[int], list[bool], int],
    n: int,
    kind: CorrelationKind,
) -> np.ndarray:
    source, flip, _ = layout
    head = np.tile(np.array(prefix, dtype=np.intp), (len(suffixes), 1))
    digits = np.hstack([head, suffixes])
    full = alphabet[digits][:, source]
    flipped = np.flatnonzero(flip)
    if len(flipped):
        full[:, flipped] = _NEGATE[full[:, flipped]]
    for t in range(1, n):
        products = _MUL_CONJ[full, np.roll(full, -t, axis=1)]
        if kind is CorrelationKind.NEGAPERIODIC:
            products[:, n - t :] = _NEGATE[products[:, n - t :]]
        keep = ~UNIT_COORDS[products].sum(axis=1).any(axis=1)
        full = full[keep]
        if not len(full):
            break
    return full


def _unit_sequence_batches(spec: SearchSpec, threads: int) -> Iterator[np.ndarray]:
    n = spec.length
    kind = _correlation_kind(spec.kind)
    alphabet = alphabet_indices(spec.alphabet)
    size = len(alphabet)
    layout = _bitpack.symmetry_layout(n, spec.effective_symmetry)
    free = layout[2]
    suffix_len = min(free, int(math.log(_CHUNK_ROWS, size)))
    suffixes = np.array(
        list(itertools.product(range(size), repeat=suffix_len)), dtype=np.intp
    ).reshape(size**suffix_len, suffix_len)
    prefixes = list(itertools.product(range(size), repeat=free - suffix_len))
    logger.info(
        "Searching %d^%d candidates of length %d in %d partitions on %d threads",
        size,
        free,
        n,
        len(prefixes),
        threads,
    )
    with ThreadPoolExecutor(max_workers=threads) as pool:
        # map() returns partitions in submission order, which is lexicographic.
        yield from pool.map(
            lambda prefix: _filter_chunk(prefix, suffixes, alphabet, layout, n, kind),
            prefixes,
        )


# Pairs and quads of {±1}-sequences, matched in the middle on summed profiles.


class _Matcher:
    """Groups left keys with the right keys that equal them."""

    def __init__(self, left: np.ndarray, right: np.ndarray) -> None:
        _, inverse = np.unique(np.vstack([left, right]), axis=0, return_inverse=True)
        inverse = inverse.reshape(-1)
        self.left_ids = inverse[: len(left)]
        right_ids = inverse[len(left) :]
        self.order = np.argsort(right_ids, kind="stable")
        self.counts = np.bincount(right_ids, minlength=int(inverse.max()) + 1)
        self.starts = np.concatenate([[0], np.cumsum(self.counts)])

    def matches(self, i: int) -> np.ndarray:
        """Right indices whose key equals left key i, ascending."""
        group = self.left_ids[i]
        return self.order[self.starts[group] : self.starts[group + 1]]


def _golay_batches(spec: SearchSpec) -> Iterator[np.ndarray]:
    n = spec.length
    words = _bitpack.class_words(n, spec.effective_symmetry)
    prof = _bitpack.profiles(words, n, CorrelationKind.APERIODIC)
    pad = np.zeros((len(words), 1), dtype=np.int64)
    matcher = _Matcher(np.hstack([-prof, pad]), np.hstack([prof, pad]))
    for ia in range(len(words)):
        partners = matcher.matches(ia)
        if len(partners):
            yield np.column_stack([np.full(len(partners), words[ia]), words[partners]])


def _quad_batches(spec: SearchSpec) -> Iterator[np.ndarray]:
    n = spec.length
    words = _bitpack.class_words(n, spec.effective_symmetry)
    m = len(words)
    prof = _bitpack.profiles(words, n, _correlation_kind(spec.kind))
    sums = (prof[:, None, :] + prof[None, :, :]).reshape(m * m, n - 1)
    if spec.q8_property:
        # a_r b_r c_r d_r = 1 everywhere exactly when a ^ b == c ^ d.
        extra = (words[:, None] ^ words[None, :]).reshape(m * m, 1)
    else:
        extra = np.zeros((m * m, 1), dtype=np.int64)
    matcher = _Matcher(np.hstack([-sums, extra]), np.hstack([sums, extra]))
    amicable = (
        _bitpack.amicability_matrix(words, n)
        if spec.kind is DesignKind.WILLIAMSON_TYPE
        else None
    )
    logger.info("Matching %d member pairs of length %d", m * m, n)
    for pair in range(m * m):
        cd = matcher.matches(pair)
        if not len(cd):
            continue
        ia, ib = divmod(pair, m)
        ic, id_ = np.divmod(cd, m)
        if amicable is not None:
            if not amicable[ia, ib]:
                continue
            keep = (
                amicable[ia, ic]
                & amicable[ia, id_]
                & amicable[ib, ic]
                & amicable[ib, id_]
                & amicable[ic, id_]
            )
            ic, id_ = ic[keep], id_[keep]
            if not len(ic):
                continue
        yield np.column_stack(
            [np.full(len(ic), words[ia]), np.full(len(ic), words[ib]), words[ic], words[id_]]
        )


def _batches(spec: SearchSpec, threads: int | None) -> Iterator[np.ndarray]:
    check_bounds(spec)
    if spec.kind is DesignKind.GOLAY:
        return _golay_batches(spec)
    if spec.kind.is_quad:
        return _quad_batches(spec)
    if spec.alphabet is AlphabetName.SIGNS:
        return _sign_sequence_batches(spec)
    return _unit_sequence_batches(spec, threads or get_settings().threads)


def _decode(spec: SearchSpec, row: np.ndarray) -> SearchObject:
    n = spec.length
    if spec.kind in (DesignKind.PERFECT, DesignKind.ODD_PERFECT):
        if spec.alphabet is AlphabetName.SIGNS:
            return QSeq.from_signs(_bitpack.unpack_word(row[0], n))
        return QSeq.from_indices(row)
    members = [QSeq.from_signs(_bitpack.unpack_word(w, n)) for w in row]
    if spec.kind is DesignKind.GOLAY:
        return members[0], members[1]
    return Quad.of(members)


def format_result(obj: SearchObject) -> str:
    if isinstance(obj, tuple):
        return ",".join(str(member) for member in obj)
    return str(obj)


def stream_results(spec: SearchSpec, threads: int | None = None) -> Iterator[SearchObject]:
    """Yields every object in the search space lazily, in lexicographic order."""
    for batch in _batches(spec, threads):
        for row in batch:
            yield _decode(spec, row)


def enumerate_designs(spec: SearchSpec, threads: int | None = None) -> SearchResult:
    """Runs an exhaustive search; the count is exact and the listing stops at the cap."""
    cap = spec.cap or get_settings().search_cap
    count = 0
    results: list[str] = []
    for batch in _batches(spec, threads):
        count += len(batch)
        for row in batch[: max(0, cap - len(results))]:
            results.append(format_result(_decode(spec, row)))
    logger.info("%s search at length %d found %d", spec.kind.value, spec.length, count)
    return SearchResult(spec=spec, count=count, results=results, truncated=count > len(results))


def count_williamson_q8(n: int) -> int:
    """Raw number of Williamson quads of even length n with the Q8-property."""
    if n % 2:
        raise DimensionError(f"the Q8-property count is for even lengths, got {n}")
    spec = SearchSpec(kind=DesignKind.WILLIAMSON, length=n, q8_property=True, cap=1)
    return enumerate_designs(spec).count
