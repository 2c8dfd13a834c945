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
Constructions of perfect, odd perfect, Williamson and nega-Williamson designs.

Every construction checks its inputs, builds its output, then re-runs the
postcondition predicates on the output. A failed re-check raises
`VerificationError`; nothing is returned unverified. Each successful step
produces a `ConstructionReceipt`, collected by the `receipts()` context manager.
"""

import logging
import math
from collections.abc import Callable, Iterator, Sequence
from contextlib import contextmanager
from contextvars import ContextVar
from typing import NamedTuple

from .correlation import (
    QMatrix,
    has_array_orthogonality,
    is_complementary_set,
    is_odd_perfect,
    is_perfect,
)
from .data_models.constructions import ConstructionReceipt, NonexistenceCertificate
from .data_models.enums import (
    AlphabetName,
    ConversionDirection,
    CorrelationKind,
    DesignKind,
    NegaConSet,
    SymmetryRequirement,
)
from .designs import (
    bad_decode,
    bad_encode,
    has_q8_property,
    in_alphabet,
    is_golay_pair,
    is_nega_williamson,
    is_williamson,
    nega_williamson_violation,
    williamson_violation,
)
from .exceptions import DimensionError, PreconditionError, SymmetryClassError, VerificationError
from .quaternion import I, J, K
from .sequences import (
    QSeq,
    Quad,
    alternate_negate,
    classify_symmetry,
    concat,
    cyclic_shift,
    doub,
    interleave,
    negacyclic_shift,
    negadoub,
    negate,
    require_same_length,
    reverse,
    scalar_premul,
)

logger = logging.getLogger(__name__)

_RECEIPTS: ContextVar[list[ConstructionReceipt] | None] = ContextVar(
    "quatseq_receipts", default=None
)


@contextmanager
def receipts() -> Iterator[list[ConstructionReceipt]]:
    """Collects the receipts of every construction run inside the block."""
    collected: list[ConstructionReceipt] = []
    token = _RECEIPTS.set(collected)
    try:
        yield collected
    finally:
        _RECEIPTS.reset(token)


def _describe(value: object) -> str:
    return str(value)


def _finish(
    name: str,
    inputs: dict[str, object],
    outputs: Sequence[object],
    checks: dict[str, Callable[[], bool]],
    advisories: dict[str, bool] | None = None,
) -> None:
    outcomes = {label: bool(check()) for label, check in checks.items()}
    failed = [label for label, ok in outcomes.items() if not ok]
    if failed:
        raise VerificationError(
            f"{name} produced an output failing {', '.join(failed)}", name, failed
        )
    receipt = ConstructionReceipt(
        name=name,
        inputs={k: _describe(v) for k, v in inputs.items()},
        outputs=[_describe(o) for o in outputs],
        checks=outcomes,
        advisories=advisories or {},
    )
    logger.debug("%s verified: %s", name, ", ".join(outcomes))
    collected = _RECEIPTS.get()
    if collected is not None:
        collected.append(receipt)


def _require(condition: bool, message: str, predicate: str) -> None:  # noqa: FBT001
    if not condition:
        raise PreconditionError(message, predicate)


def _require_symmetry(condition: bool, message: str, predicate: str) -> None:  # noqa: FBT001
    if not condition:
        raise SymmetryClassError(message, predicate)


def _require_golay(a: QSeq, b: QSeq) -> None:
    _require(is_golay_pair(a, b), f"({a}, {b}) is not a Golay pair", "golay")


def _require_coprime(n: int, m: int) -> None:
    if math.gcd(n, m) != 1:
        raise DimensionError(f"lengths {n} and {m} are not coprime")


# Products.


def luke_periodic_product(x: QSeq, y: QSeq) -> QSeq:
    """Entry r is x_{r mod n} y_{r mod m}; perfect when x (over Q8) and y (over Q+) are."""
    n, m = len(x), len(y)
    _require_coprime(n, m)
    _require(in_alphabet(x, AlphabetName.Q8), f"{x} is not over Q8", "q8-alphabet")
    _require(in_alphabet(y, AlphabetName.QPLUS), f"{y} is not over Q+", "qplus-alphabet")
    _require(is_perfect(x), f"{x} is not perfect", "perfect")
    _require(is_perfect(y), f"{y} is not perfect", "perfect")
    out = QSeq(tuple(x[r % n] * y[r % m] for r in range(n * m)))
    checks: dict[str, Callable[[], bool]] = {
        "perfect": lambda: is_perfect(out),
        "qplus-alphabet": lambda: in_alphabet(out, AlphabetName.QPLUS),
    }
    if classify_symmetry(x).symmetric and classify_symmetry(y).symmetric:
        checks["symmetric"] = lambda: classify_symmetry(out).symmetric
    _finish("luke_periodic_product", {"x": x, "y": y}, [out], checks)
    return out


def luke_odd_product(x: QSeq, y: QSeq) -> QSeq:
    """Entry r is (-1)^(floor(r/n) + floor(r/m)) x_{r mod n} y_{r mod m}."""
    n, m = len(x), len(y)
    _require_coprime(n, m)
    if n % 2 and m % 2:
        raise DimensionError(f"one of the lengths {n}, {m} must be even")
    _require(is_odd_perfect(x), f"{x} is not odd perfect", "odd-perfect")
    _require(is_odd_perfect(y), f"{y} is not odd perfect", "odd-perfect")
    entries = []
    for r in range(n * m):
        entry = x[r % n] * y[r % m]
        entries.append(-entry if (r // n + r // m) % 2 else entry)
    out = QSeq(tuple(entries))
    checks: dict[str, Callable[[], bool]] = {"odd-perfect": lambda: is_odd_perfect(out)}
    if classify_symmetry(x).palindromic and classify_symmetry(y).palindromic:
        checks["antipalindromic"] = lambda: classify_symmetry(out).antipalindromic
    _finish("luke_odd_product", {"x": x, "y": y}, [out], checks)
    return out


# Transfers between periodic and negaperiodic designs.


def alternating_negation_transfer(quad: Quad) -> Quad:
    """Alternately negates each member of an odd-length quad.

    Periodic complementary quads map to negacomplementary ones and back.
    """
    if quad.length % 2 == 0:
        raise DimensionError(f"alternating negation transfer needs an odd length, got {quad.length}")
    if is_complementary_set(quad.members, CorrelationKind.PERIODIC):
        target = CorrelationKind.NEGAPERIODIC
    elif is_complementary_set(quad.members, CorrelationKind.NEGAPERIODIC):
        target = CorrelationKind.PERIODIC
    else:
        raise PreconditionError(
            f"{quad} is neither periodic complementary nor negacomplementary",
            "complementary",
        )
    out = quad.map(alternate_negate)
    _finish(
        "alternating_negation_transfer",
        {"quad": quad},
        out.members,
        {f"{target.value}-complementary": lambda: is_complementary_set(out.members, target)},
    )
    return out


def pal_antipal_convert(nw: Quad, direction: ConversionDirection) -> Quad:
    """Applies n/2 negacyclic shifts to every member of an even-length nega-Williamson quad.

    FORWARD maps palindromic to antipalindromic, INVERSE maps antipalindromic to
    palindromic.
    """
    n = nw.length
    if n % 2:
        raise DimensionError(f"palindromic/antipalindromic conversion needs an even length, got {n}")
    source, target = (
        (SymmetryRequirement.PALINDROMIC, SymmetryRequirement.ANTIPALINDROMIC)
        if direction is ConversionDirection.FORWARD
        else (SymmetryRequirement.ANTIPALINDROMIC, SymmetryRequirement.PALINDROMIC)
    )
    reason = nega_williamson_violation(nw, source)
    _require(reason is None, f"{nw} is not {source.value} nega-Williamson: {reason}", f"{source.value}-nega-williamson")
    out = nw.map(lambda x: negacyclic_shift(x, n // 2))
    _finish(
        "pal_antipal_convert",
        {"nw": nw, "direction": direction.value},
        out.members,
        {f"{target.value}-nega-williamson": lambda: is_nega_williamson(out, target)},
    )
    return out


def williamson_nega_convert_odd(quad: Quad, direction: ConversionDirection) -> Quad:
    """Odd-length correspondence between Williamson and palindromic nega-Williamson quads.

    FORWARD alternately negates each member then applies (n-1)/2 negacyclic
    shifts; INVERSE undoes both steps.
    """
    n = quad.length
    if n % 2 == 0:
        raise DimensionError(f"Williamson/nega-Williamson conversion needs an odd length, got {n}")
    shifts = (n - 1) // 2
    if direction is ConversionDirection.FORWARD:
        reason = williamson_violation(quad)
        _require(reason is None, f"{quad} is not Williamson: {reason}", "williamson")
        out = quad.map(lambda x: negacyclic_shift(alternate_negate(x), shifts))
        check = ("palindromic-nega-williamson", lambda: is_nega_williamson(out, SymmetryRequirement.PALINDROMIC))
    else:
        reason = nega_williamson_violation(quad, SymmetryRequirement.PALINDROMIC)
        _require(reason is None, f"{quad} is not palindromic nega-Williamson: {reason}", "palindromic-nega-williamson")
        out = quad.map(lambda x: alternate_negate(negacyclic_shift(x, -shifts)))
        check = ("williamson", lambda: is_williamson(out))
    _finish(
        "williamson_nega_convert_odd",
        {"quad": quad, "direction": direction.value},
        out.members,
        dict([check]),
    )
    return out


def negadouble_set(seqs: Sequence[QSeq]) -> list[QSeq]:
    """Negadoubles every member of an aperiodic complementary set."""
    _require(
        is_complementary_set(seqs, CorrelationKind.APERIODIC),
        "input sequences are not complementary",
        "complementary",
    )
    out = [negadoub(s) for s in seqs]
    _finish(
        "negadouble_set",
        {f"s{i}": s for i, s in enumerate(seqs)},
        out,
        {"negacomplementary": lambda: is_complementary_set(out, CorrelationKind.NEGAPERIODIC)},
    )
    return out


# Doubling constructions for Williamson quads.


def williamson_double_even(w: Quad, nw: Quad) -> Quad:
    """Builds the Williamson quad doub(X) ⨝ n(X') of length 4n from even-length inputs."""
    require_same_length(w.a, nw.a)
    if w.length % 2:
        raise DimensionError(f"the even doubling needs an even length, got {w.length}")
    reason = williamson_violation(w)
    _require(reason is None, f"{w} is not Williamson: {reason}", "williamson")
    reason = nega_williamson_violation(nw, SymmetryRequirement.ANTIPALINDROMIC)
    _require(reason is None, f"{nw} is not antipalindromic nega-Williamson: {reason}", "antipalindromic-nega-williamson")
    out = Quad(*(interleave(doub(x), negadoub(xp)) for x, xp in zip(w, nw, strict=True)))
    checks: dict[str, Callable[[], bool]] = {"williamson": lambda: is_williamson(out)}
    if has_q8_property(w) and has_q8_property(nw):
        checks["q8-property"] = lambda: has_q8_property(out)
    _finish("williamson_double_even", {"w": w, "nw": nw}, out.members, checks)
    return out


def williamson_double_odd(w: Quad, nw: Quad) -> Quad:
    """Builds the Williamson quad n(X') ⨝ doub(X) of length 4n from odd-length inputs.

    `w` must already be shifted to palindromic form and `nw` to antisymmetric
    form; `williamson_double_odd_from_designs` applies those shifts.
    """
    require_same_length(w.a, nw.a)
    if w.length % 2 == 0:
        raise DimensionError(f"the odd doubling needs an odd length, got {w.length}")
    _require_symmetry(
        all(classify_symmetry(x).palindromic for x in w),
        f"{w} members are not palindromic",
        "palindromic",
    )
    _require(
        is_complementary_set(w.members, CorrelationKind.PERIODIC),
        f"{w} is not periodic complementary",
        "periodic-complementary",
    )
    _require_symmetry(
        all(classify_symmetry(x).antisymmetric for x in nw),
        f"{nw} members are not antisymmetric",
        "antisymmetric",
    )
    _require(
        is_complementary_set(nw.members, CorrelationKind.NEGAPERIODIC),
        f"{nw} is not negacomplementary",
        "negacomplementary",
    )
    out = Quad(*(interleave(negadoub(xp), doub(x)) for x, xp in zip(w, nw, strict=True)))
    _finish("williamson_double_odd", {"w": w, "nw": nw}, out.members, {"williamson": lambda: is_williamson(out)})
    return out


def williamson_double_odd_from_designs(w: Quad, nw: Quad) -> Quad:
    """Shifts a Williamson quad and a palindromic nega-Williamson quad, then doubles them."""
    n = w.length
    if n % 2 == 0:
        raise DimensionError(f"the odd doubling needs an odd length, got {n}")
    reason = williamson_violation(w)
    _require(reason is None, f"{w} is not Williamson: {reason}", "williamson")
    reason = nega_williamson_violation(nw, SymmetryRequirement.PALINDROMIC)
    _require(reason is None, f"{nw} is not palindromic nega-Williamson: {reason}", "palindromic-nega-williamson")
    shifted_w = w.map(lambda x: cyclic_shift(x, (n - 1) // 2))
    shifted_nw = nw.map(lambda x: negacyclic_shift(x, (n + 1) // 2))
    return williamson_double_odd(shifted_w, shifted_nw)


# Golay-derived families.


def negcon_from_golay(a: QSeq, b: QSeq, which: NegaConSet = NegaConSet.SET1) -> Quad:
    """Palindromic nega-Williamson quad with the Q8-property from a Golay pair.

    SET1 has length 4n and SET2 has length 8n.
    """
    _require_golay(a, b)
    ra, rb = reverse(a), reverse(b)
    na, nb, nra, nrb = negate(a), negate(b), negate(ra), negate(rb)
    if which is NegaConSet.SET1:
        members = (
            concat(a, b, rb, ra),
            concat(rb, ra, a, b),
            concat(nrb, ra, a, nb),
            concat(na, b, rb, nra),
        )
    else:
        members = (
            concat(a, b, rb, ra, a, b, rb, ra),
            concat(a, b, nrb, nra, na, nb, rb, ra),
            concat(a, nb, rb, nra, na, b, nrb, ra),
            concat(a, nb, nrb, ra, a, nb, nrb, ra),
        )
    out = Quad(*members)
    _finish(
        "negcon_from_golay",
        {"a": a, "b": b, "set": which.value},
        out.members,
        {
            "palindromic-nega-williamson": lambda: is_nega_williamson(out, SymmetryRequirement.PALINDROMIC),
            "q8-property": lambda: has_q8_property(out),
        },
    )
    return out


def odd_perfect_from_golay(a: QSeq, b: QSeq) -> QSeq:
    """P = [-A; jB; kB̃; iÃ; iA; kB; jB̃; -Ã], a palindromic odd perfect Q8 sequence."""
    _require_golay(a, b)
    ra, rb = reverse(a), reverse(b)
    out = concat(
        negate(a),
        scalar_premul(J, b),
        scalar_premul(K, rb),
        scalar_premul(I, ra),
        scalar_premul(I, a),
        scalar_premul(K, b),
        scalar_premul(J, rb),
        negate(ra),
    )
    _finish(
        "odd_perfect_from_golay",
        {"a": a, "b": b},
        [out],
        {
            "palindromic": lambda: classify_symmetry(out).palindromic,
            "odd-perfect": lambda: is_odd_perfect(out),
            "q8-alphabet": lambda: in_alphabet(out, AlphabetName.Q8),
        },
    )
    return out


def golay_interleave_double(a: QSeq, b: QSeq) -> tuple[QSeq, QSeq]:
    """(A, B) -> (A ⨝ B, A ⨝ -B)."""
    _require_golay(a, b)
    out = (interleave(a, b), interleave(a, negate(b)))
    _finish("golay_interleave_double", {"a": a, "b": b}, out, {"golay": lambda: is_golay_pair(*out)})
    return out


def golay_chain(t: int) -> tuple[QSeq, QSeq]:
    """The Golay pair of length 2^t reached from (+, +) by interleave doubling."""
    if t < 0:
        raise DimensionError(f"chain depth must be non-negative, got {t}")
    pair = (QSeq.from_signs([1]), QSeq.from_signs([1]))
    for _ in range(t):
        pair = golay_interleave_double(*pair)
    return pair


# Odd perfect sequences through the correspondence.


def odd_perfect_from_nega_williamson(nw: Quad) -> QSeq:
    """Encodes a palindromic nega-Williamson quad as a palindromic odd perfect Q+ sequence."""
    reason = nega_williamson_violation(nw, SymmetryRequirement.PALINDROMIC)
    _require(reason is None, f"{nw} is not palindromic nega-Williamson: {reason}", "palindromic-nega-williamson")
    out = bad_encode(nw)
    _finish(
        "odd_perfect_from_nega_williamson",
        {"nw": nw},
        [out],
        {
            "palindromic": lambda: classify_symmetry(out).palindromic,
            "odd-perfect": lambda: is_odd_perfect(out),
        },
    )
    return out


def nega_williamson_from_odd_perfect(s: QSeq) -> Quad:
    """Decodes a palindromic odd perfect Q+ sequence into a palindromic nega-Williamson quad."""
    _require_symmetry(classify_symmetry(s).palindromic, f"{s} is not palindromic", "palindromic")
    _require(is_odd_perfect(s), f"{s} is not odd perfect", "odd-perfect")
    _require(in_alphabet(s, AlphabetName.QPLUS), f"{s} is not over Q+", "qplus-alphabet")
    out = bad_decode(s)
    _finish(
        "nega_williamson_from_odd_perfect",
        {"s": s},
        out.members,
        {"palindromic-nega-williamson": lambda: is_nega_williamson(out, SymmetryRequirement.PALINDROMIC)},
    )
    return out


def palindromize_odd_perfect(x: QSeq) -> QSeq:
    """Applies n/2 negacyclic shifts to an even-length antipalindromic odd perfect sequence."""
    n = len(x)
    if n % 2:
        raise DimensionError(f"palindromization needs an even length, got {n}")
    _require_symmetry(classify_symmetry(x).antipalindromic, f"{x} is not antipalindromic", "antipalindromic")
    _require(is_odd_perfect(x), f"{x} is not odd perfect", "odd-perfect")
    out = negacyclic_shift(x, n // 2)
    _finish(
        "palindromize_odd_perfect",
        {"x": x},
        [out],
        {
            "palindromic": lambda: classify_symmetry(out).palindromic,
            "odd-perfect": lambda: is_odd_perfect(out),
        },
    )
    return out


# Powers of two.


class PipelineResult(NamedTuple):
    williamson: Quad
    perfect: QSeq


_BASE_W0 = ("+", "+", "+", "+")
_BASE_W1 = ("++", "++", "+-", "+-")


def _quad(*texts: str) -> Quad:
    return Quad.of(QSeq.from_signs(1 if ch == "+" else -1 for ch in text) for text in texts)


def _antipalindromic_nega(s: int, nega_set: NegaConSet | None) -> Quad:
    """Antipalindromic nega-Williamson quad with the Q8-property of length 2^s, s >= 1."""
    if s == 1:
        return pal_antipal_convert(_quad("++", "++", "++", "++"), ConversionDirection.FORWARD)
    if s == 2 or nega_set is NegaConSet.SET1:
        pal = negcon_from_golay(*golay_chain(s - 2), which=NegaConSet.SET1)
    else:
        pal = negcon_from_golay(*golay_chain(s - 3), which=NegaConSet.SET2)
    return pal_antipal_convert(pal, ConversionDirection.FORWARD)


def _williamson_power_of_two(t: int, nega_set: NegaConSet | None) -> Quad:
    if t == 0:
        return _quad(*_BASE_W0)
    if t == 1:
        return _quad(*_BASE_W1)
    if t == 2:
        # Length-1 designs satisfy every symmetry class, so no shifts are needed.
        base = _quad(*_BASE_W0)
        return williamson_double_odd(base, base)
    return williamson_double_even(
        _williamson_power_of_two(t - 2, nega_set), _antipalindromic_nega(t - 2, nega_set)
    )


def power_of_two_pipeline(t: int, nega_set: NegaConSet | None = None) -> PipelineResult:
    """A Williamson quad of length 2^t with the Q8-property and its symmetric perfect Q8 image.

    For lengths 2^s >= 8 the antipalindromic nega-Williamson ingredient comes
    from the second Golay family unless `nega_set` selects the first.
    """
    if t < 0:
        raise DimensionError(f"t must be non-negative, got {t}")
    logger.info("Running the power-of-two pipeline for length %d", 2**t)
    williamson = _williamson_power_of_two(t, nega_set)
    perfect = bad_encode(williamson)
    _finish(
        "power_of_two_pipeline",
        {"t": t, "set": (nega_set or NegaConSet.SET2).value},
        [perfect],
        {
            "williamson": lambda: is_williamson(williamson),
            "q8-property": lambda: has_q8_property(williamson),
            "symmetric": lambda: classify_symmetry(perfect).symmetric,
            "perfect": lambda: is_perfect(perfect),
            "q8-alphabet": lambda: in_alphabet(perfect, AlphabetName.Q8),
        },
    )
    return PipelineResult(williamson, perfect)


def matrix_from_perfect(p: QSeq, cols: int = 4) -> QMatrix:
    """Writes `p` row by row into a (n/cols)×cols matrix, M[i][j] = p[cols*i + j]."""
    if cols < 1 or len(p) % cols:
        raise DimensionError(f"length {len(p)} is not divisible by {cols} columns")
    out = QMatrix(tuple(p.entries[i : i + cols] for i in range(0, len(p), cols)))
    orthogonal = out.shape[0] % cols == 0 and has_array_orthogonality(out)
    _finish(
        "matrix_from_perfect",
        {"p": p, "cols": cols},
        [QSeq(row) for row in out.rows],
        {"shape": lambda: out.shape == (len(p) // cols, cols)},
        advisories={"array-orthogonality": orthogonal},
    )
    return out


# Nonexistence.

_EXHAUSTIVE_LIMIT = 7


def nonexistence_check_antipal_odd(n: int) -> NonexistenceCertificate:
    """Row-sum argument, and for small n an exhaustive search, for antipalindromic
    nega-Williamson quads of odd length n."""
    from .search import SearchSpec, enumerate_designs

    if n < 1 or n % 2 == 0:
        raise DimensionError(f"the nonexistence check needs an odd length, got {n}")
    free = (n + 1) // 2
    rowsums: set[int] = set()
    for mask in range(2**free):
        head = [-1 if mask >> r & 1 else 1 for r in range(free)]
        # Antipalindromic: the tail mirrors the head with a sign flip; the middle is free.
        full = head + [-v for v in reversed(head[:-1])]
        seq = QSeq.from_signs(full)
        rowsums.add(sum(alternate_negate(seq).signs().tolist()))
    max_total = 4 * max(v * v for v in rowsums)
    count = None
    if n <= _EXHAUSTIVE_LIMIT:
        result = enumerate_designs(
            SearchSpec(kind=DesignKind.ANTIPAL_NEGA_WILLIAMSON, length=n, cap=1)
        )
        count = result.count
    certificate = NonexistenceCertificate(
        length=n,
        rowsum_values=sorted(rowsums),
        max_rowsum_square_total=max_total,
        required_rowsum_square_total=4 * n,
        exhaustive_count=count,
    )
    logger.info("Antipalindromic nega-Williamson length %d: exists=%s", n, certificate.exists)
    return certificate
