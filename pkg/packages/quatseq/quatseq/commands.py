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
Command bodies behind the CLI. Each returns a `CommandResult`; the click layer
only parses flags, prints and exits.
"""

import logging
from collections.abc import Callable

from . import constructions
from .catalog_io import (
    catalog_entry_for,
    format_catalog_entry,
    parse_any,
    parse_matrix,
    parse_pair,
    parse_quad,
    read_catalog,
    verify_catalog,
)
from .correlation import (
    QMatrix,
    array_orthogonality_violation,
    perfect_array_violation,
    perfection_violation,
)
from .data_models.commands import CommandResult
from .data_models.constructions import ConstructionReceipt
from .data_models.enums import (
    ConversionDirection,
    CorrelationKind,
    DesignKind,
    NegaConSet,
    ProductMode,
    VerifyProperty,
)
from .data_models.search import SearchSpec
from .designs import (
    golay_violation,
    nega_williamson_violation,
    williamson_entry_products,
    williamson_violation,
)
from .search import enumerate_designs
from .sequences import Quad

logger = logging.getLogger(__name__)


def _q8_property_violation(text: str) -> tuple[str | None, dict | None]:
    products = williamson_entry_products(parse_quad(text))
    for r, p in enumerate(products):
        if p != 1:
            return f"a_r b_r c_r d_r = {p} at r={r}", {"r": r, "value": p}
    return None, None


def _correlation_failure(kind: CorrelationKind) -> Callable[[str], tuple[str | None, dict | None]]:
    def check(text: str) -> tuple[str | None, dict | None]:
        hit = perfection_violation(parse_any(text), kind)
        if hit is None:
            return None, None
        return f"t={hit[0]} (value {hit[1]})", {"t": hit[0], "value": str(hit[1])}

    return check


def _golay_failure(text: str) -> tuple[str | None, dict | None]:
    hit = golay_violation(*parse_pair(text))
    if hit is None:
        return None, None
    return f"t={hit[0]} (sum {hit[1]})", {"t": hit[0], "value": str(hit[1])}


def _reason_only(
    parse: Callable[[str], Quad | QMatrix], violation: Callable[..., str | None]
) -> Callable[[str], tuple[str | None, dict | None]]:
    def check(text: str) -> tuple[str | None, dict | None]:
        reason = violation(parse(text))
        return reason, ({"reason": reason} if reason else None)

    return check


def _perfect_array_failure(text: str) -> tuple[str | None, dict | None]:
    hit = perfect_array_violation(parse_matrix(text))
    if hit is None:
        return None, None
    t, t2, value = hit
    return f"shift ({t}, {t2}) (value {value})", {"t": t, "t2": t2, "value": str(value)}


_VERIFIERS: dict[VerifyProperty, Callable[[str], tuple[str | None, dict | None]]] = {
    VerifyProperty.PERFECT: _correlation_failure(CorrelationKind.PERIODIC),
    VerifyProperty.ODD_PERFECT: _correlation_failure(CorrelationKind.NEGAPERIODIC),
    VerifyProperty.GOLAY: _golay_failure,
    VerifyProperty.WILLIAMSON: _reason_only(parse_quad, williamson_violation),
    VerifyProperty.NEGA_WILLIAMSON: _reason_only(parse_quad, nega_williamson_violation),
    VerifyProperty.Q8_PROPERTY: _q8_property_violation,
    VerifyProperty.ARRAY_ORTHOGONALITY: _reason_only(parse_matrix, array_orthogonality_violation),
    VerifyProperty.PERFECT_ARRAY: _perfect_array_failure,
}


def cmd_verify(text: str, prop: VerifyProperty) -> CommandResult:
    """Checks one property and reports the first violation."""
    reason, detail = _VERIFIERS[prop](text)
    passed = reason is None
    report = f"{prop.value}: pass" if passed else f"{prop.value}: FAIL at {reason}"
    payload = {"property": prop.value, "passed": passed, "violation": detail}
    return CommandResult.from_check(passed, report, payload)


def _construction_result(
    outputs: list[str], collected: list[ConstructionReceipt], extra: list[str] | None = None
) -> CommandResult:
    lines = [
        f"# {r.name}: " + ", ".join(f"{label} ok" for label in r.checks) for r in collected
    ]
    lines.extend(extra or [])
    lines.extend(outputs)
    payload = {
        "outputs": outputs,
        "receipts": [r.model_dump(mode="json") for r in collected],
    }
    return CommandResult.from_check(True, "\n".join(lines), payload)


def _quad_lines(q: Quad) -> list[str]:
    return [str(m) for m in q.members]


def cmd_construct_power2(t: int, nega_set: NegaConSet | None = None) -> CommandResult:
    with constructions.receipts() as collected:
        result = constructions.power_of_two_pipeline(t, nega_set)
    return _construction_result(
        [str(result.perfect)], collected, [f"williamson: {result.williamson}"]
    )


def cmd_construct_main(williamson: str, nega: str) -> CommandResult:
    with constructions.receipts() as collected:
        out = constructions.williamson_double_even(parse_quad(williamson), parse_quad(nega))
    return _construction_result(_quad_lines(out), collected)


def cmd_construct_odd_variant(williamson: str, nega: str) -> CommandResult:
    with constructions.receipts() as collected:
        out = constructions.williamson_double_odd_from_designs(
            parse_quad(williamson), parse_quad(nega)
        )
    return _construction_result(_quad_lines(out), collected)


def cmd_construct_negcon(golay: str, which: NegaConSet) -> CommandResult:
    with constructions.receipts() as collected:
        out = constructions.negcon_from_golay(*parse_pair(golay), which=which)
    return _construction_result(_quad_lines(out), collected)


def cmd_construct_odd_perfect(golay: str) -> CommandResult:
    with constructions.receipts() as collected:
        out = constructions.odd_perfect_from_golay(*parse_pair(golay))
    return _construction_result([str(out)], collected)


def cmd_construct_product(x: str, y: str, mode: ProductMode) -> CommandResult:
    build = (
        constructions.luke_periodic_product
        if mode is ProductMode.PERIODIC
        else constructions.luke_odd_product
    )
    with constructions.receipts() as collected:
        out = build(parse_any(x), parse_any(y))
    return _construction_result([str(out)], collected)


def cmd_construct_matrix(perfect: str, cols: int = 4) -> CommandResult:
    with constructions.receipts() as collected:
        matrix = constructions.matrix_from_perfect(parse_any(perfect), cols)
    orthogonal = collected[-1].advisories["array-orthogonality"]
    rows = [str(row) for row in matrix.row_sequences()]
    result = _construction_result(
        rows, collected, [f"array orthogonality: {'yes' if orthogonal else 'no'}"]
    )
    if result.payload is not None:
        result.payload["array_orthogonality"] = orthogonal
    return result


def cmd_construct_nega_odd(nega: str) -> CommandResult:
    with constructions.receipts() as collected:
        out = constructions.odd_perfect_from_nega_williamson(parse_quad(nega))
    return _construction_result([str(out)], collected)


def cmd_construct_golay(t: int) -> CommandResult:
    with constructions.receipts() as collected:
        a, b = constructions.golay_chain(t)
    return _construction_result([str(a), str(b)], collected)


def cmd_construct_pal_antipal(nega: str, direction: ConversionDirection) -> CommandResult:
    with constructions.receipts() as collected:
        out = constructions.pal_antipal_convert(parse_quad(nega), direction)
    return _construction_result(_quad_lines(out), collected)


def cmd_search(spec: SearchSpec, *, as_catalog: bool = False) -> CommandResult:
    """Runs an exhaustive search and lists results followed by the exact count."""
    result = enumerate_designs(spec)
    lines = list(result.results)
    if as_catalog:
        if spec.kind.is_quad or spec.kind is DesignKind.GOLAY:
            raise ValueError("catalog output applies to perfect and odd-perfect searches")
        lines = [
            format_catalog_entry(
                catalog_entry_for(
                    parse_any(text),
                    name=f"S_{spec.length}.{i}",
                    perfect=spec.kind is DesignKind.PERFECT,
                    odd_perfect=spec.kind is DesignKind.ODD_PERFECT,
                )
            )
            for i, text in enumerate(result.results, start=1)
        ]
    suffix = " (listing truncated)" if result.truncated else ""
    lines.append(f"count: {result.count}{suffix}")
    return CommandResult.from_check(True, "\n".join(lines), result.model_dump(mode="json"))


def cmd_catalog(path: str | None = None) -> CommandResult:
    """Verifies a catalog file and prints a pass/fail line per entry."""
    text, source = read_catalog(path)
    report = verify_catalog(text, source)
    lines = []
    for entry in report.entries:
        if entry.passed:
            lines.append(f"{entry.name}: pass")
        else:
            lines.append(f"{entry.name}: FAIL {'; '.join(entry.failures)}")
    lines.append(f"{report.total - report.failed}/{report.total} passed ({source})")
    return CommandResult.from_check(report.passed, "\n".join(lines), report.model_dump(mode="json"))
