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
Text and JSON forms of sequences, and the line-oriented catalog format.

Compact text uses one token per entry:
  + - i I j J k K   the elements of Q8, capital letters negated
  q Q               q and -q
  ~x                q times the Q8 element x (so ~+ is q and ~- is -q)

Catalog lines read `name length properties sequence`; `#` starts a comment and
whitespace inside the sequence is ignored.
"""

import importlib.resources
import json
import logging
import re
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any

from .correlation import QMatrix, perfection_violation
from .data_models.catalog import CatalogEntry, CatalogReport, EntryVerification
from .data_models.enums import AlphabetName, CorrelationKind
from .designs import in_alphabet, smallest_alphabet
from .exceptions import (
    AlphabetError,
    CatalogFormatError,
    DimensionError,
    NotAUnitError,
    SequenceParseError,
)
from .quaternion import ONE, Q, I, J, K, HurwitzUnit, QuatValue, as_unit, quat_conj, quat_mul
from .sequences import QSeq, Quad, classify_symmetry
from .settings import get_settings

logger = logging.getLogger(__name__)

_Q8_TOKENS: dict[str, HurwitzUnit] = {
    "+": ONE,
    "-": -ONE,
    "i": I,
    "I": -I,
    "j": J,
    "J": -J,
    "k": K,
    "K": -K,
}
_Q8_NAMES: dict[HurwitzUnit, str] = {u: t for t, u in _Q8_TOKENS.items()}
_Q_CONJ = quat_conj(Q)

SHIPPED_CATALOG = "data/appendix.qcat"

_MEMBER_SEPARATOR = re.compile(r"[,\n;]")

_ALPHABET_PROPERTIES = {a.value: a for a in AlphabetName}


def parse_sequence(text: str) -> QSeq:
    """Parses compact text; whitespace between tokens is ignored."""
    entries: list[HurwitzUnit] = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "~":
            if pos + 1 >= len(text) or text[pos + 1] not in _Q8_TOKENS:
                raise SequenceParseError(f"'~' at position {pos} must precede one of +-iIjJkK", pos)
            entries.append(quat_mul(Q, _Q8_TOKENS[text[pos + 1]]))
            pos += 2
            continue
        if ch == "q":
            entries.append(Q)
        elif ch == "Q":
            entries.append(-Q)
        elif ch in _Q8_TOKENS:
            entries.append(_Q8_TOKENS[ch])
        else:
            raise SequenceParseError(f"unknown token {ch!r} at position {pos}", pos)
        pos += 1
    if not entries:
        raise SequenceParseError("empty sequence", 0)
    return QSeq(tuple(entries))


def _token(entry: HurwitzUnit) -> str:
    if entry in _Q8_NAMES:
        return _Q8_NAMES[entry]
    inner = quat_mul(_Q_CONJ, entry)
    if inner == ONE:
        return "q"
    if inner == -ONE:
        return "Q"
    if inner in _Q8_NAMES:
        return "~" + _Q8_NAMES[inner]
    raise AlphabetError(f"{entry} is outside Q+ and has no compact token")


def format_sequence(s: QSeq) -> str:
    """Compact text for a sequence over Q+."""
    return "".join(_token(e) for e in s)


def sequence_to_json(s: QSeq) -> list[list[int]]:
    """Doubled coordinates [w2, x2, y2, z2] per entry."""
    return [list(e.doubled) for e in s]


def format_sequence_any(s: QSeq) -> str:
    """Compact text when possible, otherwise the JSON coordinate form."""
    try:
        return format_sequence(s)
    except AlphabetError:
        return json.dumps(sequence_to_json(s), separators=(",", ":"))


def sequence_from_json(data: str | list[Any]) -> QSeq:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise SequenceParseError(f"invalid JSON: {e.msg}", e.pos) from e
    if not isinstance(data, list) or not data:
        raise SequenceParseError("expected a non-empty JSON array of 4-tuples")
    entries = []
    for r, item in enumerate(data):
        if not (isinstance(item, list) and len(item) == 4 and all(isinstance(c, int) for c in item)):
            raise SequenceParseError(f"entry {r} is not a list of four integers", r)
        try:
            entries.append(as_unit(QuatValue(*item)))
        except NotAUnitError as e:
            raise SequenceParseError(f"entry {r} is not a Hurwitz unit", r) from e
    return QSeq(tuple(entries))


def parse_any(text: str) -> QSeq:
    """Parses either compact text or the JSON coordinate form."""
    stripped = text.strip()
    if stripped.startswith("["):
        return sequence_from_json(stripped)
    return parse_sequence(stripped)


def _members(text: str, expected: int | None = None) -> list[QSeq]:
    parts = [p for p in (part.strip() for part in _MEMBER_SEPARATOR.split(text)) if p]
    if expected is not None and len(parts) != expected:
        raise SequenceParseError(f"expected {expected} sequences, got {len(parts)}")
    return [parse_sequence(p) for p in parts]


def parse_quad(text: str) -> Quad:
    """Four {±1}-sequences separated by commas or newlines."""
    return Quad.of(_members(text, 4))


def parse_pair(text: str) -> tuple[QSeq, QSeq]:
    a, b = _members(text, 2)
    return a, b


def parse_matrix(text: str) -> QMatrix:
    """Rows separated by commas or newlines."""
    rows = _members(text)
    if not rows:
        raise SequenceParseError("empty matrix")
    return QMatrix.from_rows(rows)


# Catalog files.


def _parse_properties(field: str, line_number: int) -> dict[str, Any]:
    props: dict[str, Any] = {}
    for name in filter(None, field.split(",")):
        match name:
            case "palindromic":
                props["palindromic"] = True
            case "odd-perfect":
                props["odd_perfect"] = True
            case "perfect":
                props["perfect"] = True
            case _ if name in _ALPHABET_PROPERTIES:
                props["alphabet"] = _ALPHABET_PROPERTIES[name]
            case _:
                raise CatalogFormatError(f"unknown property {name!r}", line_number)
    return props


def parse_catalog_line(line: str, line_number: int) -> CatalogEntry | None:
    """Parses one catalog line; blank lines and comments give None."""
    content = line.split("#", 1)[0].strip()
    if not content:
        return None
    fields = content.split(None, 3)
    if len(fields) < 4:
        raise CatalogFormatError("expected: name length properties sequence", line_number)
    name, length_text, properties, sequence_text = fields
    try:
        length = int(length_text)
    except ValueError:
        raise CatalogFormatError(f"length {length_text!r} is not an integer", line_number) from None
    if length < 1:
        raise CatalogFormatError(f"length must be positive, got {length}", line_number)
    sequence = "".join(sequence_text.split())
    try:
        parse_sequence(sequence)
    except SequenceParseError as e:
        raise CatalogFormatError(str(e), line_number) from e
    return CatalogEntry(
        name=name,
        length=length,
        sequence=sequence,
        line_number=line_number,
        **_parse_properties(properties, line_number),
    )


def load_catalog(text: str) -> tuple[list[CatalogEntry], list[CatalogFormatError]]:
    """Parses every line, collecting malformed lines instead of stopping."""
    entries: list[CatalogEntry] = []
    errors: list[CatalogFormatError] = []
    for number, line in enumerate(text.splitlines(), start=1):
        try:
            entry = parse_catalog_line(line, number)
        except CatalogFormatError as e:
            errors.append(e)
            continue
        if entry is not None:
            entries.append(entry)
    return entries, errors


def format_catalog_entry(entry: CatalogEntry) -> str:
    props = [
        label
        for label, flag in (
            ("palindromic", entry.palindromic),
            ("odd-perfect", entry.odd_perfect),
            ("perfect", entry.perfect),
        )
        if flag
    ]
    props.append(entry.alphabet.value)
    return f"{entry.name} {entry.length} {','.join(props)} {entry.sequence}"


def catalog_entry_for(
    s: QSeq, *, name: str | None = None, perfect: bool = False, odd_perfect: bool = False
) -> CatalogEntry:
    """Describes a sequence as a catalog entry, declaring its smallest alphabet."""
    alphabet = smallest_alphabet(s)
    if alphabet is AlphabetName.HURWITZ:
        raise DimensionError(f"{s} is outside Q+ and cannot be written to a catalog")
    return CatalogEntry(
        name=name or f"S_{len(s)}",
        length=len(s),
        sequence=format_sequence(s),
        palindromic=classify_symmetry(s).palindromic,
        perfect=perfect,
        odd_perfect=odd_perfect,
        alphabet=alphabet,
    )


def verify_entry(entry: CatalogEntry) -> EntryVerification:
    """Checks the declared length, symmetry, correlation and alphabet of an entry."""
    seq = parse_sequence(entry.sequence)
    failures: list[str] = []
    first_shift = None
    if len(seq) != entry.length:
        failures.append(f"declared length {entry.length}, parsed {len(seq)}")
    if entry.palindromic and not classify_symmetry(seq).palindromic:
        failures.append("not palindromic")
    for declared, kind, label in (
        (entry.odd_perfect, CorrelationKind.NEGAPERIODIC, "odd perfect"),
        (entry.perfect, CorrelationKind.PERIODIC, "perfect"),
    ):
        if not declared:
            continue
        hit = perfection_violation(seq, kind)
        if hit is not None:
            first_shift = hit[0] if first_shift is None else first_shift
            failures.append(f"not {label}: shift {hit[0]} gives {hit[1]}")
    if not in_alphabet(seq, entry.alphabet):
        failures.append(f"entries outside {entry.alphabet.value}")
    if failures:
        logger.warning("Catalog entry %s failed: %s", entry.name, "; ".join(failures))
    return EntryVerification(
        name=entry.name,
        line_number=entry.line_number,
        passed=not failures,
        failures=failures,
        first_nonzero_shift=first_shift,
    )


def verify_catalog(text: str, source: str = "<text>", threads: int | None = None) -> CatalogReport:
    """Verifies every entry of a catalog; malformed lines are reported and skipped."""
    entries, errors = load_catalog(text)
    workers = threads or get_settings().threads
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(verify_entry, entries))
    for error in errors:
        logger.warning("Catalog %s: %s", source, error)
        results.append(
            EntryVerification(
                name=f"line {error.line_number}",
                line_number=error.line_number,
                passed=False,
                failures=[str(error)],
            )
        )
    results.sort(key=lambda r: r.line_number or 0)
    return CatalogReport(source=source, entries=results)


def read_shipped_catalog() -> str:
    resource = importlib.resources.files("quatseq").joinpath(SHIPPED_CATALOG)
    return resource.read_text(encoding="utf-8")


def read_catalog(path: str | None = None) -> tuple[str, str]:
    """Returns (text, source) for a path, the configured catalog, or the shipped one."""
    path = path or get_settings().catalog_path
    if path is None:
        return read_shipped_catalog(), SHIPPED_CATALOG
    return Path(path).read_text(encoding="utf-8"), path
