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
Tests for exact quaternion arithmetic and the unit tables.
"""

import numpy as np
import pytest
from hypothesis import given

from quatseq.exceptions import InexactProductError, NotAUnitError
from quatseq.quaternion import (
    CONJ_TABLE,
    MUL_CONJ_TABLE,
    MUL_TABLE,
    ONE,
    Q,
    Q8,
    QPLUS,
    QQ8,
    UNIT_COORDS,
    UNITS,
    ZERO,
    I,
    J,
    K,
    QuatValue,
    alphabet_membership,
    as_unit,
    quat_conj,
    quat_mul,
    unit_index,
)

from .strategies import units


class TestQuatMul:
    """Tests for the Hamilton product."""

    def test_basis_products(self):
        assert quat_mul(I, J) == K
        assert quat_mul(J, K) == I
        assert quat_mul(K, I) == J
        assert quat_mul(J, I) == -K

    def test_q_cubed_is_minus_one(self):
        assert quat_mul(quat_mul(Q, Q), Q) == -ONE

    @given(units)
    def test_one_is_identity(self, u):
        assert quat_mul(ONE, u) == u
        assert quat_mul(u, ONE) == u

    @given(units, units, units)
    def test_associative(self, a, b, c):
        assert quat_mul(quat_mul(a, b), c) == quat_mul(a, quat_mul(b, c))

    def test_inexact_product_raises(self):
        half = QuatValue(1, 0, 0, 0)
        with pytest.raises(InexactProductError):
            quat_mul(half, half)

    def test_operator_matches_function(self):
        assert Q * I == quat_mul(Q, I)


class TestQuatConj:
    """Tests for conjugation."""

    def test_pure_imaginary_negates(self):
        assert quat_conj(K) == -K

    def test_real_fixed(self):
        assert quat_conj(ONE) == ONE

    def test_q_times_conjugate_is_one(self):
        assert quat_conj(Q) == QuatValue(1, -1, -1, -1)
        assert quat_mul(Q, quat_conj(Q)) == ONE

    @given(units, units)
    def test_conjugate_reverses_products(self, a, b):
        assert quat_conj(quat_mul(a, b)) == quat_mul(quat_conj(b), quat_conj(a))


class TestQuatValue:
    """Tests for QuatValue helpers."""

    def test_str(self):
        assert str(QuatValue.integer(2)) == "2"
        assert str(ZERO) == "0"
        assert str(Q) == "(1+i+j+k)/2"
        assert str(-J) == "-j"

    def test_predicates(self):
        assert Q.is_unit
        assert Q.is_hurwitz
        assert not QuatValue(1, 0, 0, 0).is_hurwitz
        assert QuatValue.integer(2).is_real
        assert not QuatValue.integer(2).is_unit
        assert ZERO.is_zero

    def test_arithmetic(self):
        assert ONE + ONE == QuatValue.integer(2)
        assert (I - I).is_zero
        assert I.scale(3) == QuatValue.integer(x=3)


class TestUnits:
    """Tests for the canonical unit ordering and lookup tables."""

    def test_counts(self):
        assert len(UNITS) == 24
        assert len(set(UNITS)) == 24
        assert len(Q8) == 8
        assert len(QQ8) == 8
        assert len(QPLUS) == 16

    def test_canonical_order_starts_with_axis_units(self):
        assert UNITS[:8] == (ONE, -ONE, I, -I, J, -J, K, -K)
        assert UNITS[8] == Q

    def test_unit_index_rejects_non_units(self):
        with pytest.raises(NotAUnitError):
            unit_index(QuatValue.integer(2))
        with pytest.raises(NotAUnitError):
            as_unit(ZERO)

    @given(units, units)
    def test_tables_agree_with_arithmetic(self, a, b):
        ia, ib = unit_index(a), unit_index(b)
        assert UNITS[MUL_TABLE[ia, ib]] == quat_mul(a, b)
        assert UNITS[MUL_CONJ_TABLE[ia, ib]] == quat_mul(a, quat_conj(b))
        assert UNITS[CONJ_TABLE[ia]] == quat_conj(a)
        assert tuple(UNIT_COORDS[ia]) == a.doubled

    def test_unit_coords_have_norm_one(self):
        assert np.all((UNIT_COORDS**2).sum(axis=1) == 4)


class TestAlphabetMembership:
    """Tests for classifying units against Q8, Q+ and qQ8."""

    def test_q8_element(self):
        assert alphabet_membership(-J) == (True, True, False)

    def test_q(self):
        assert alphabet_membership(Q) == (False, True, True)

    def test_q_times_minus_i(self):
        membership = alphabet_membership(quat_mul(Q, -I))
        assert membership.in_qplus
        assert membership.in_qq8

    def test_negation_closed(self):
        assert {-u for u in QQ8} == set(QQ8)

    def test_half_unit_outside_qplus(self):
        outside = [u for u in UNITS if u not in QPLUS]
        assert len(outside) == 8
        assert not alphabet_membership(outside[0]).in_qplus
