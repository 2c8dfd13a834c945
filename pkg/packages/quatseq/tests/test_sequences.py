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
Tests for quaternion sequences and their structural operations.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quatseq.catalog_io import parse_sequence
from quatseq.exceptions import DimensionError, LengthMismatchError, NotSignedError
from quatseq.quaternion import ONE, Q, I, J, QuatValue
from quatseq.sequences import (
    QSeq,
    Quad,
    alternate_negate,
    classify_symmetry,
    concat,
    cyclic_shift,
    deinterleave,
    doub,
    interleave,
    negacyclic_shift,
    negadoub,
    negate,
    reverse,
    rowsum,
    scalar_premul,
)

from .strategies import (
    even_antipalindromic_sequences,
    odd_antisymmetric_sequences,
    palindromic_sequences,
    sequence_pairs,
    sequences,
    symmetric_sequences,
)


def s(text):
    return parse_sequence(text)


class TestQSeq:
    """Tests for construction and views of QSeq."""

    def test_empty_rejected(self):
        with pytest.raises(DimensionError):
            QSeq(())

    def test_from_signs_rejects_other_values(self):
        with pytest.raises(NotSignedError):
            QSeq.from_signs([1, 0])

    def test_views(self):
        x = s("+q-")
        assert len(x) == 3
        assert x[1] == Q
        assert x[0:2] == s("+q")
        assert list(x.indices) == [0, 8, 1]
        assert x.coords.shape == (3, 4)
        assert not x.coords.flags.writeable

    def test_signs(self):
        assert s("+-+").is_signed
        assert list(s("+-+").signs()) == [1, -1, 1]
        assert not s("+i").is_signed
        with pytest.raises(NotSignedError):
            s("+i").signs()

    def test_str_uses_compact_text(self):
        assert str(s("+q-+Q-")) == "+q-+Q-"

    def test_quad_requires_equal_signed_members(self):
        with pytest.raises(LengthMismatchError):
            Quad(s("+"), s("+"), s("+"), s("++"))
        with pytest.raises(NotSignedError):
            Quad(s("i"), s("+"), s("+"), s("+"))
        with pytest.raises(DimensionError):
            Quad.of([s("+")] * 3)
        assert str(Quad.uniform(s("+-"))) == "+-,+-,+-,+-"


class TestShifts:
    """Tests for cyclic and negacyclic shifts."""

    def test_cyclic(self):
        x = QSeq.of([ONE, I, J])
        assert cyclic_shift(x, 1) == QSeq.of([J, ONE, I])
        assert cyclic_shift(x, 0) == x
        assert cyclic_shift(x, 3) == x

    def test_negacyclic(self):
        assert negacyclic_shift(s("++-"), 1) == s("+++")
        assert negacyclic_shift(s("+-q"), 0) == s("+-q")
        assert negacyclic_shift(s("++"), 4) == s("++")
        assert negacyclic_shift(s("+j"), 2) == s("-J")

    @given(sequences())
    def test_negacyclic_inverse(self, x):
        assert negacyclic_shift(negacyclic_shift(x, 3), -3) == x

    @given(sequences())
    def test_negacyclic_period(self, x):
        assert negacyclic_shift(x, len(x)) == negate(x)
        assert negacyclic_shift(x, 2 * len(x)) == x


class TestTransforms:
    """Tests for negation, doubling, interleaving and friends."""

    def test_alternate_negate(self):
        assert alternate_negate(s("+--")) == s("++-")
        assert alternate_negate(s("++++")) == s("+-+-")

    @given(sequences())
    def test_alternate_negate_involution(self, x):
        assert alternate_negate(alternate_negate(x)) == x

    def test_doubling(self):
        assert doub(s("q")) == s("qq")
        assert negadoub(s("q")) == s("qQ")

    def test_interleave(self):
        assert interleave(s("+i"), s("jk")) == s("+jik")
        assert interleave(doub(s("++-+")), negadoub(s("+-+-"))) == s("+++--++-+-++--++")

    def test_deinterleave(self):
        assert deinterleave(s("+jik")) == (s("+i"), s("jk"))
        assert deinterleave(s("+++--++-+-++--++")) == (doub(s("++-+")), negadoub(s("+-+-")))
        with pytest.raises(DimensionError):
            deinterleave(s("+++"))

    @given(sequence_pairs())
    def test_deinterleave_inverts_interleave(self, pair):
        x, y = pair
        assert deinterleave(interleave(x, y)) == (x, y)

    def test_interleave_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            interleave(s("+"), s("++"))

    def test_small_helpers(self):
        assert reverse(s("+-")) == s("-+")
        assert concat(s("+"), s("-")) == s("+-")
        assert scalar_premul(J, s("-+")) == s("Jj")
        assert rowsum(s("+--")) == -ONE
        assert rowsum(s("q+")) == QuatValue(3, 1, 1, 1)


class TestClassifySymmetry:
    """Tests for the four symmetry classes."""

    def test_symmetric_and_palindromic_examples(self):
        assert classify_symmetry(s("+iji")).symmetric
        assert classify_symmetry(s("iji")).palindromic

    def test_length_one_is_everything(self):
        assert classify_symmetry(s("k")) == (True, True, True, True)

    def test_antipalindromic_not_symmetric(self):
        cls = classify_symmetry(s("++--"))
        assert cls.antipalindromic
        assert not cls.symmetric

    def test_alternating_signs_in_both_classes(self):
        cls = classify_symmetry(s("+-+-"))
        assert cls.antipalindromic
        assert cls.symmetric

    def test_antisymmetric(self):
        assert classify_symmetry(s("+i+I")).antisymmetric
        assert not classify_symmetry(s("+i+i")).antisymmetric

    @given(sequences(min_size=2))
    def test_symmetric_iff_tail_palindromic(self, x):
        assert classify_symmetry(x).symmetric == classify_symmetry(QSeq(x.entries[1:])).palindromic

    @given(sequences())
    def test_reflection_concatenations(self, x):
        assert classify_symmetry(concat(x, reverse(x))).palindromic
        assert classify_symmetry(concat(x, negate(reverse(x)))).antipalindromic


class TestSymmetryPreservation:
    """Tests for the symmetry classes produced by doubling and interleaving."""

    @given(symmetric_sequences())
    def test_doubling_keeps_symmetric(self, x):
        assert classify_symmetry(doub(x)).symmetric

    @given(even_antipalindromic_sequences())
    def test_negadoubling_antipalindromic_gives_palindromic(self, x):
        assert classify_symmetry(negadoub(x)).palindromic

    @given(symmetric_sequences(max_size=8), st.data())
    def test_interleave_symmetric_with_palindromic(self, x, data):
        y = data.draw(palindromic_sequences(min_size=len(x), max_size=len(x)))
        assert classify_symmetry(interleave(x, y)).symmetric

    @given(odd_antisymmetric_sequences())
    def test_negadoubling_odd_antisymmetric_gives_symmetric(self, x):
        assert classify_symmetry(negadoub(x)).symmetric

    @given(palindromic_sequences())
    def test_doubling_keeps_palindromic(self, x):
        assert classify_symmetry(doub(x)).palindromic
