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
Tests for the constructions, against the worked examples and their own
postconditions.
"""

import pytest

from quatseq import constructions
from quatseq.catalog_io import parse_quad, parse_sequence
from quatseq.correlation import has_array_orthogonality, is_odd_perfect, is_perfect
from quatseq.data_models.enums import (
    AlphabetName,
    ConversionDirection,
    CorrelationKind,
    NegaConSet,
    SymmetryRequirement,
)
from quatseq.designs import (
    bad_decode,
    has_q8_property,
    in_alphabet,
    is_golay_pair,
    is_nega_williamson,
    is_williamson,
)
from quatseq.exceptions import DimensionError, PreconditionError, SymmetryClassError
from quatseq.sequences import classify_symmetry


def s(text):
    return parse_sequence(text)


class TestProducts:
    """Tests for the periodic and odd products of coprime-length sequences."""

    def test_odd_product_example(self):
        assert constructions.luke_odd_product(s("++"), s("+q+")) == s("+q-+Q-")

    def test_odd_product_of_catalog_entries(self):
        out = constructions.luke_odd_product(s("++"), s("I~-I"))
        assert len(out) == 6
        assert is_odd_perfect(out)
        assert classify_symmetry(out).antipalindromic

    def test_periodic_product(self):
        out = constructions.luke_periodic_product(s("--+-"), s("q-JJ-"))
        assert len(out) == 20
        assert is_perfect(out)
        assert in_alphabet(out, AlphabetName.QPLUS)

    def test_periodic_product_with_length_one(self):
        out = constructions.luke_periodic_product(s("-"), s("q-JJ-"))
        assert out == s("Q+jj+")

    def test_length_requirements(self):
        with pytest.raises(DimensionError):
            constructions.luke_periodic_product(s("+++-"), s("--+-"))
        with pytest.raises(DimensionError):
            constructions.luke_odd_product(s("+"), s("+q+"))

    def test_rejects_non_perfect_factor(self):
        with pytest.raises(PreconditionError) as excinfo:
            constructions.luke_periodic_product(s("++"), s("q-JJ-"))
        assert excinfo.value.predicate == "perfect"


class TestTransfers:
    """Tests for alternating negation and the symmetry conversions."""

    def test_alternating_negation_example(self):
        out = constructions.alternating_negation_transfer(parse_quad("+--,+--,+--,+++"))
        assert out == parse_quad("++-,++-,++-,+-+")
        assert constructions.alternating_negation_transfer(out) == parse_quad("+--,+--,+--,+++")

    def test_alternating_negation_needs_odd_length(self):
        with pytest.raises(DimensionError):
            constructions.alternating_negation_transfer(parse_quad("++,++,+-,+-"))

    def test_pal_antipal_example(self):
        antipal = parse_quad("+--++-,+-+-+-,++-+--,+++---")
        pal = constructions.pal_antipal_convert(antipal, ConversionDirection.INVERSE)
        assert pal == parse_quad("--++--,+-++-+,-++++-,++++++")

    def test_pal_antipal_forward(self):
        out = constructions.pal_antipal_convert(
            parse_quad("++,++,++,++"), ConversionDirection.FORWARD
        )
        assert out == parse_quad("-+,-+,-+,-+")
        assert is_nega_williamson(out, SymmetryRequirement.ANTIPALINDROMIC)

    def test_williamson_nega_convert_odd(self):
        w = parse_quad("-++--++,---++--,-+----+,-+----+")
        nw = constructions.williamson_nega_convert_odd(w, ConversionDirection.FORWARD)
        assert nw == parse_quad("++---++,--+-+--,+-----+,+-----+")
        assert constructions.williamson_nega_convert_odd(nw, ConversionDirection.INVERSE) == w

    def test_williamson_nega_convert_length_one(self):
        unit = parse_quad("+,+,+,+")
        assert constructions.williamson_nega_convert_odd(unit, ConversionDirection.FORWARD) == unit

    def test_negadouble_set(self):
        out = constructions.negadouble_set([s("+++"), s("+--"), s("+-+"), s("++-")])
        assert out == [s("+++---"), s("+---++"), s("+-+-+-"), s("++---+")]
        assert constructions.negadouble_set([s("+")]) == [s("+-")]


class TestWilliamsonDoubling:
    """Tests for the doubling constructions of Williamson quads."""

    def test_even_example(self):
        out = constructions.williamson_double_even(
            parse_quad("++-+,++-+,++-+,++-+"), parse_quad("+-+-,+-+-,++--,++--")
        )
        assert out == parse_quad(
            "+++--++-+-++--++,+++--++-+-++--++,++++--+-+-+--+++,++++--+-+-+--+++"
        )

    def test_even_length_two(self):
        out = constructions.williamson_double_even(
            parse_quad("++,++,+-,+-"), parse_quad("+-,+-,+-,+-")
        )
        assert out.length == 8
        assert is_williamson(out)

    def test_odd_example(self):
        out = constructions.williamson_double_odd_from_designs(
            parse_quad("++--+,-+--+,-++++,-++++"), parse_quad("+---+,++-++,+---+,+++++")
        )
        assert str(out.a) == "+-++-+++-----+++-++-"
        assert is_williamson(out)

    def test_odd_length_one(self):
        unit = parse_quad("+,+,+,+")
        assert constructions.williamson_double_odd(unit, unit) == parse_quad("++-+,++-+,++-+,++-+")

    def test_odd_rejects_non_palindromic_members(self):
        w = parse_quad("++-,++-,++-,++-")
        with pytest.raises(SymmetryClassError) as excinfo:
            constructions.williamson_double_odd(w, w)
        assert excinfo.value.predicate == "palindromic"

    def test_even_rejects_wrong_symmetry(self):
        with pytest.raises(PreconditionError):
            constructions.williamson_double_even(
                parse_quad("++-+,++-+,++-+,++-+"), parse_quad("+--+,+--+,++++,++++")
            )


class TestGolayFamilies:
    """Tests for the Golay-derived constructions."""

    def test_negcon_set1(self):
        out = constructions.negcon_from_golay(s("++"), s("+-"), NegaConSet.SET1)
        assert out == parse_quad("+++--+++,-++++++-,+-++++-+,--+--+--")

    def test_negcon_set2(self):
        out = constructions.negcon_from_golay(s("++"), s("+-"), NegaConSet.SET2)
        assert out == parse_quad(
            "+++--++++++--+++,+++-+------+-+++,++-+-+----+-+-++,++-++-++++-++-++"
        )

    def test_negcon_length_four(self):
        out = constructions.negcon_from_golay(s("+"), s("+"))
        assert out == parse_quad("++++,++++,-++-,-++-")
        assert has_q8_property(out)

    def test_negcon_rejects_non_golay(self):
        with pytest.raises(PreconditionError) as excinfo:
            constructions.negcon_from_golay(s("++"), s("++"))
        assert excinfo.value.predicate == "golay"

    def test_odd_perfect_from_golay(self):
        assert constructions.odd_perfect_from_golay(s("++"), s("+-")) == s("--jJKkiiiikKJj--")
        assert constructions.odd_perfect_from_golay(s("+"), s("+")) == s("-jkiikj-")

    def test_interleave_double(self):
        assert constructions.golay_interleave_double(s("+"), s("+")) == (s("++"), s("+-"))
        assert constructions.golay_interleave_double(s("++"), s("+-")) == (s("+++-"), s("+-++"))

    @pytest.mark.parametrize("t", range(6))
    def test_golay_chain(self, t):
        a, b = constructions.golay_chain(t)
        assert len(a) == 2**t
        assert is_golay_pair(a, b)

    def test_golay_chain_rejects_negative(self):
        with pytest.raises(DimensionError):
            constructions.golay_chain(-1)


class TestOddPerfectCorrespondence:
    """Tests for odd perfect sequences through the quad correspondence."""

    def test_from_nega_williamson(self):
        out = constructions.odd_perfect_from_nega_williamson(parse_quad("++++,++++,-++-,-++-"))
        assert out == s("j--j")

    def test_round_trip_through_catalog_entry(self):
        quad = constructions.nega_williamson_from_odd_perfect(s("-jkiikj-"))
        assert is_nega_williamson(quad, SymmetryRequirement.PALINDROMIC)
        assert constructions.odd_perfect_from_nega_williamson(quad) == s("-jkiikj-")

    def test_palindromize(self):
        assert constructions.palindromize_odd_perfect(s("+q-+Q-")) == s("-q++q-")

    def test_palindromize_rejects_odd_length(self):
        with pytest.raises(DimensionError):
            constructions.palindromize_odd_perfect(s("+q+"))

    def test_symmetry_class_failures(self):
        with pytest.raises(SymmetryClassError) as excinfo:
            constructions.palindromize_odd_perfect(s("++"))
        assert excinfo.value.predicate == "antipalindromic"
        assert isinstance(excinfo.value, PreconditionError)
        with pytest.raises(SymmetryClassError):
            constructions.nega_williamson_from_odd_perfect(s("+-"))


class TestPowerOfTwoPipeline:
    """Tests for the Williamson pipeline at lengths 2^t."""

    @pytest.mark.parametrize(
        ("t", "expected"),
        [
            (0, "-"),
            (1, "-j"),
            (2, "--+-"),
            (3, "-+j---j+"),
            (4, "-+-J+j-----j+J-+"),
        ],
    )
    def test_worked_examples(self, t, expected):
        assert str(constructions.power_of_two_pipeline(t).perfect) == expected

    @pytest.mark.parametrize("t", range(13))
    def test_properties(self, t):
        result = constructions.power_of_two_pipeline(t)
        perfect = result.perfect
        assert len(perfect) == 2**t
        assert classify_symmetry(perfect).symmetric
        assert in_alphabet(perfect, AlphabetName.Q8)
        assert is_perfect(perfect)
        assert is_williamson(result.williamson)
        assert has_q8_property(result.williamson)
        assert bad_decode(perfect) == result.williamson

    @pytest.mark.parametrize("t", [5, 6])
    def test_first_golay_family(self, t):
        result = constructions.power_of_two_pipeline(t, NegaConSet.SET1)
        assert is_perfect(result.perfect)
        assert has_q8_property(result.williamson)

    def test_rejects_negative(self):
        with pytest.raises(DimensionError):
            constructions.power_of_two_pipeline(-1)


class TestMatrices:
    """Tests for arranging perfect sequences as matrices."""

    @pytest.mark.parametrize("t", [4, 5, 6, 7])
    def test_pipeline_matrices_have_array_orthogonality(self, t):
        perfect = constructions.power_of_two_pipeline(t).perfect
        matrix = constructions.matrix_from_perfect(perfect)
        assert matrix.shape == (2**t // 4, 4)
        assert has_array_orthogonality(matrix)

    def test_non_perfect_sequence(self):
        matrix = constructions.matrix_from_perfect(s("+" * 16))
        assert not has_array_orthogonality(matrix)

    def test_receipt_records_array_orthogonality(self):
        perfect = constructions.power_of_two_pipeline(4).perfect
        with constructions.receipts() as collected:
            constructions.matrix_from_perfect(perfect)
            constructions.matrix_from_perfect(s("+" * 16))
            constructions.matrix_from_perfect(s("+++-"))
        assert [r.advisories for r in collected] == [
            {"array-orthogonality": True},
            {"array-orthogonality": False},
            {"array-orthogonality": False},
        ]
        assert all(r.verified for r in collected)

    def test_indivisible_length(self):
        with pytest.raises(DimensionError):
            constructions.matrix_from_perfect(s("+++"), 4)


class TestNonexistence:
    """Tests for antipalindromic nega-Williamson quads of odd length."""

    def test_length_one_exists(self):
        assert constructions.nonexistence_check_antipal_odd(1).exists

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_exhaustive_small_lengths(self, n):
        certificate = constructions.nonexistence_check_antipal_odd(n)
        assert certificate.exhaustive_count == 0
        assert certificate.rowsum_values == [-1, 1]
        assert certificate.max_rowsum_square_total == 4
        assert not certificate.exists

    def test_rowsum_argument_beyond_search(self):
        certificate = constructions.nonexistence_check_antipal_odd(9)
        assert certificate.exhaustive_count is None
        assert certificate.required_rowsum_square_total == 36
        assert not certificate.exists

    def test_rejects_even_length(self):
        with pytest.raises(DimensionError):
            constructions.nonexistence_check_antipal_odd(4)


class TestReceipts:
    """Tests for construction provenance."""

    def test_collects_every_step(self):
        with constructions.receipts() as collected:
            constructions.golay_chain(2)
        assert [r.name for r in collected] == ["golay_interleave_double"] * 2
        assert all(r.verified for r in collected)
        assert collected[0].inputs == {"a": "+", "b": "+"}
        assert collected[0].outputs == ["++", "+-"]

    def test_nothing_collected_outside_block(self):
        with constructions.receipts() as collected:
            pass
        constructions.golay_chain(1)
        assert collected == []

    def test_periodic_complementarity_kind_recorded(self):
        with constructions.receipts() as collected:
            constructions.alternating_negation_transfer(parse_quad("+--,+--,+--,+++"))
        assert collected[0].checks == {f"{CorrelationKind.NEGAPERIODIC.value}-complementary": True}
