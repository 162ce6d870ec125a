"""Tests for the symplectic Pauli algebra."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fermion_codes import pauli
from fermion_codes.dense_oracle import dense_of_pauli
from fermion_codes.pauli import (
    PauliOp,
    commutes,
    from_letters,
    identity,
    is_hermitian,
    parse,
    pauli_mul,
    render,
    single_qubit,
    weight,
)


def random_pauli(rng: np.random.Generator, n: int) -> PauliOp:
    return PauliOp(
        n,
        int(rng.integers(0, 1 << n)),
        int(rng.integers(0, 1 << n)),
        int(rng.integers(0, 4)),
    )


class TestSingleQubitTable:
    def test_x_squared_is_identity(self):
        x0 = single_qubit(1, 0, "X")
        assert pauli_mul(x0, x0) == identity(1)

    def test_x_times_z_is_minus_i_y(self):
        x0 = single_qubit(1, 0, "X")
        z0 = single_qubit(1, 0, "Z")
        prod = pauli_mul(x0, z0)
        # X Z = -i Y: phase exponent 3 under the Y = iXZ convention.
        assert prod == PauliOp(1, 1, 1, 3)
        assert render(prod) == "-iY0"

    def test_all_single_qubit_products_match_dense(self):
        for a in "IXYZ":
            for b in "IXYZ":
                pa, pb = single_qubit(1, 0, a), single_qubit(1, 0, b)
                lhs = dense_of_pauli(pauli_mul(pa, pb))
                rhs = dense_of_pauli(pa) @ dense_of_pauli(pb)
                assert np.allclose(lhs, rhs), f"{a}*{b}"

    def test_mismatched_sizes_raise(self):
        with pytest.raises(ValueError):
            pauli_mul(identity(2), identity(3))
        with pytest.raises(ValueError):
            commutes(identity(2), identity(3))


class TestCommutes:
    def test_x_z_anticommute(self):
        assert not commutes(single_qubit(1, 0, "X"), single_qubit(1, 0, "Z"))

    def test_x_x_commute(self):
        assert commutes(single_qubit(1, 0, "X"), single_qubit(1, 0, "X"))

    def test_phase_independent(self):
        a = from_letters(3, {0: "X", 2: "Y"}, phase=3)
        b = from_letters(3, {0: "Z", 1: "Y"}, phase=1)
        assert commutes(a, b) == commutes(a.scale(1), b.scale(2))

    def test_symmetric(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            a, b = random_pauli(rng, 5), random_pauli(rng, 5)
            assert commutes(a, b) == commutes(b, a)


class TestWeightHermitian:
    def test_weight_identity(self):
        assert weight(identity(4)) == 0

    def test_weight_counts_nontrivial_letters(self):
        p = from_letters(6, {0: "X", 3: "Y", 5: "Z"})
        assert weight(p) == 3

    def test_hermitian_letters(self):
        assert is_hermitian(single_qubit(1, 0, "X"))
        assert not is_hermitian(single_qubit(1, 0, "X").scale(1))  # i X
        assert is_hermitian(single_qubit(1, 0, "X").scale(2))  # -X

    def test_product_weight_bound(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            a, b = random_pauli(rng, 6), random_pauli(rng, 6)
            assert weight(pauli_mul(a, b)) <= weight(a) + weight(b)


class TestAlgebraProperties:
    def test_commutator_phase_flip(self):
        # a b = (-1)^(symplectic product) b a, exactly.
        rng = np.random.default_rng(11)
        for _ in range(300):
            a, b = random_pauli(rng, 5), random_pauli(rng, 5)
            ab, ba = pauli_mul(a, b), pauli_mul(b, a)
            if commutes(a, b):
                assert ab == ba
            else:
                assert ab == ba.scale(2)

    def test_hermitian_squares_to_identity(self):
        rng = np.random.default_rng(13)
        for _ in range(300):
            a = random_pauli(rng, 5)
            if not is_hermitian(a):
                a = a.scale(1)
            sq = pauli_mul(a, a)
            assert sq == identity(5)

    def test_associativity_random(self):
        rng = np.random.default_rng(17)
        for _ in range(300):
            a, b, c = (random_pauli(rng, 4) for _ in range(3))
            assert pauli_mul(pauli_mul(a, b), c) == pauli_mul(a, pauli_mul(b, c))

    def test_dense_cross_check_1000_pairs(self):
        # Dense product equals represented product bit-for-bit incl. phase.
        rng = np.random.default_rng(23)
        for _ in range(1000):
            n = int(rng.integers(1, 9))
            a, b = random_pauli(rng, n), random_pauli(rng, n)
            prod = pauli_mul(a, b)
            assert np.allclose(
                dense_of_pauli(prod),
                dense_of_pauli(a) @ dense_of_pauli(b),
                atol=1e-12,
            )


@given(
    st.integers(min_value=1, max_value=10),
    st.data(),
)
@settings(max_examples=200, deadline=None)
def test_round_trip_text_form(n, data):
    x = data.draw(st.integers(min_value=0, max_value=(1 << n) - 1))
    z = data.draw(st.integers(min_value=0, max_value=(1 << n) - 1))
    phase = data.draw(st.integers(min_value=0, max_value=3))
    p = PauliOp(n, x, z, phase)
    assert parse(render(p), n) == p


def test_parse_example():
    p = parse("+iY0 X3 Z5", 6)
    assert p == from_letters(6, {0: "Y", 3: "X", 5: "Z"}, phase=1)


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse("+iQ0", 2)
    with pytest.raises(ValueError):
        parse("+X0 X0", 2)
