"""Tests for the Majorana monomial algebra."""

from __future__ import annotations

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from fermion_codes.dense_oracle import dense_of_majorana
from fermion_codes.majorana import (
    identity,
    majorana_mul,
    mode_weight,
    monomial,
    parity_sector,
    parse,
    render,
    single,
)


def random_monomial(rng: np.random.Generator, n_modes: int):
    k = int(rng.integers(0, 2 * n_modes + 1))
    factors = [
        (int(rng.integers(0, n_modes)), int(rng.integers(0, 2))) for _ in range(k)
    ]
    return monomial(n_modes, factors, int(rng.integers(0, 4)))


class TestCanonicalForm:
    def test_self_inverse(self):
        c0 = single(2, 0, 0)
        assert majorana_mul(c0, c0) == identity(2)

    def test_anticommutation_sign(self):
        c0, c1 = single(2, 0, 0), single(2, 1, 0)
        assert majorana_mul(c1, c0) == majorana_mul(c0, c1).scale(2)

    def test_dephasing_operator_is_involution(self):
        # (-i c_j c'_j)^2 = 1.
        phi = monomial(3, [(1, 0), (1, 1)], phase=3)
        assert majorana_mul(phi, phi) == identity(3)
        assert phi.is_hermitian()

    def test_canonicalization_idempotent(self):
        rng = np.random.default_rng(5)
        for _ in range(200):
            m = random_monomial(rng, 4)
            again = monomial(m.n_modes, m.factors, m.phase)
            assert again == m

    def test_is_phase_product(self):
        assert monomial(3, [(0, 0), (0, 1), (2, 0), (2, 1)], 2).is_phase_product()
        assert not monomial(3, [(0, 0), (2, 1)]).is_phase_product()
        assert identity(3).is_phase_product()


class TestModeWeightParity:
    def test_identity(self):
        assert mode_weight(identity(3)) == 0
        assert parity_sector(identity(3)) == "even"

    def test_single_majorana_is_odd(self):
        assert parity_sector(single(4, 1, 0)) == "odd"
        assert mode_weight(monomial(4, [(1, 0), (1, 1)], 3)) == 1

    def test_two_modes(self):
        assert mode_weight(monomial(4, [(0, 0), (1, 1)])) == 2

    def test_full_product_even(self):
        m = monomial(3, [(j, k) for j in range(3) for k in (0, 1)])
        assert parity_sector(m) == "even"


class TestAgainstDenseOracle:
    def test_associativity_random_triples(self):
        rng = np.random.default_rng(31)
        for _ in range(200):
            a, b, c = (random_monomial(rng, 4) for _ in range(3))
            assert majorana_mul(majorana_mul(a, b), c) == majorana_mul(
                a, majorana_mul(b, c)
            )

    def test_products_match_jw_matrices(self):
        rng = np.random.default_rng(37)
        for _ in range(300):
            n = int(rng.integers(1, 7))
            a, b = random_monomial(rng, n), random_monomial(rng, n)
            lhs = dense_of_majorana(majorana_mul(a, b))
            rhs = dense_of_majorana(a) @ dense_of_majorana(b)
            assert np.allclose(lhs, rhs, atol=1e-12)

    def test_car_all_pairs(self):
        # {m_a, m_b} = 2 delta_ab for single Majoranas, M <= 5.
        for n in (1, 3, 5):
            singles = [single(n, j, k) for j in range(n) for k in (0, 1)]
            for i, a in enumerate(singles):
                for j, b in enumerate(singles):
                    anti = dense_of_majorana(a) @ dense_of_majorana(b) + dense_of_majorana(
                        b
                    ) @ dense_of_majorana(a)
                    expect = 2 * np.eye(1 << n) if i == j else np.zeros((1 << n, 1 << n))
                    assert np.allclose(anti, expect, atol=1e-12)

    def test_occupation_phase_diagonal(self):
        # -i c_0 c'_0 at M=2 is diag(1, 1, -1, -1).
        phi = monomial(2, [(0, 0), (0, 1)], phase=3)
        assert np.allclose(dense_of_majorana(phi), np.diag([1, 1, -1, -1]))


@given(st.integers(min_value=1, max_value=6), st.data())
@settings(max_examples=200, deadline=None)
def test_round_trip_text_form(n, data):
    k = data.draw(st.integers(min_value=0, max_value=2 * n))
    factors = data.draw(
        st.lists(
            st.tuples(
                st.integers(min_value=0, max_value=n - 1),
                st.integers(min_value=0, max_value=1),
            ),
            min_size=k,
            max_size=k,
        )
    )
    m = monomial(n, factors, data.draw(st.integers(min_value=0, max_value=3)))
    assert parse(render(m), n) == m


def test_render_example():
    m = monomial(4, [(0, 0), (0, 1), (3, 0)], phase=3)
    assert render(m) == "-i g0 g0' g3"
